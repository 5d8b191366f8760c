//! Rational functions in the parameter alphabet.
//!
//! `ParamRat` is the coefficient field for all series work. Canonical form:
//! gcd(num, den) = 1 and the denominator monic under graded lex; a constant
//! denominator is always normalised to exactly 1, which keeps the common
//! all-polynomial case on a gcd-free fast path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::poly::{ParamPoly, Var, NVARS, PARAM_NAMES};
use super::rational::Rational;
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq)]
pub struct ParamRat {
    num: ParamPoly,
    den: ParamPoly,
}

/// Canonical reduced quotient of two polynomials.
///
/// `normalize(p*q, r*q) == normalize(p, r)` for any nonzero `q`; the
/// denominator comes out monic (and equal to 1 when it is constant).
pub fn ratfunc_normalize(num: ParamPoly, den: ParamPoly) -> Result<ParamRat, AlgebraError> {
    if den.is_zero() {
        return Err(AlgebraError::ZeroDenominator);
    }
    Ok(ParamRat::reduced(num, den))
}

impl ParamRat {
    fn reduced(num: ParamPoly, den: ParamPoly) -> ParamRat {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return ParamRat {
                num: ParamPoly::zero(),
                den: ParamPoly::one(),
            };
        }
        if let Some(c) = den.as_constant() {
            return ParamRat {
                num: num.scale(&c.recip().expect("nonzero")),
                den: ParamPoly::one(),
            };
        }
        let g = ParamPoly::gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        if let Some(c) = den.as_constant() {
            return ParamRat {
                num: num.scale(&c.recip().expect("nonzero")),
                den: ParamPoly::one(),
            };
        }
        let lead = den.leading().expect("nonzero").1.clone();
        let inv = lead.recip().expect("nonzero leading coefficient");
        ParamRat {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        ParamRat {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Self {
        ParamRat {
            num: ParamPoly::one(),
            den: ParamPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        ParamRat {
            num: ParamPoly::constant(c),
            den: ParamPoly::one(),
        }
    }

    pub fn int(n: i64) -> Self {
        ParamRat::constant(Rational::from_int(n))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        ParamRat::constant(Rational::new(n, d))
    }

    pub fn var(v: Var) -> Self {
        ParamRat {
            num: ParamPoly::var(v),
            den: ParamPoly::one(),
        }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.num.uses_var(v) || self.den.uses_var(v)
    }

    pub fn recip(&self) -> Result<ParamRat, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(ParamRat::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &ParamRat) -> Result<ParamRat, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(ParamRat::reduced(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn scale(&self, c: &Rational) -> ParamRat {
        if c.is_zero() {
            return ParamRat::zero();
        }
        ParamRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Substitute concrete values for some variables. Fails with
    /// `ZeroDenominator` when the substitution kills the denominator.
    pub fn substitute(&self, vals: &[(Var, Rational)]) -> Result<ParamRat, AlgebraError> {
        let den = self.den.substitute(vals);
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(ParamRat::reduced(self.num.substitute(vals), den))
    }

    /// Full evaluation at a point of the parameter space.
    pub fn eval(&self, vals: &[Rational; NVARS]) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(vals);
        if d.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(&self.num.eval(vals) / &d)
    }

    pub fn display_with(&self, names: &[&str; NVARS]) -> String {
        if self.is_polynomial() {
            self.num.display_with(names)
        } else {
            format!(
                "({})/({})",
                self.num.display_with(names),
                self.den.display_with(names)
            )
        }
    }
}

impl Add for &ParamRat {
    type Output = ParamRat;
    fn add(self, rhs: &ParamRat) -> ParamRat {
        if self.is_polynomial() && rhs.is_polynomial() {
            return ParamRat {
                num: &self.num + &rhs.num,
                den: ParamPoly::one(),
            };
        }
        ParamRat::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &ParamRat {
    type Output = ParamRat;
    fn sub(self, rhs: &ParamRat) -> ParamRat {
        self + &(-rhs)
    }
}

impl Mul for &ParamRat {
    type Output = ParamRat;
    fn mul(self, rhs: &ParamRat) -> ParamRat {
        if self.is_zero() || rhs.is_zero() {
            return ParamRat::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return ParamRat {
                num: &self.num * &rhs.num,
                den: ParamPoly::one(),
            };
        }
        ParamRat::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &ParamRat {
    type Output = ParamRat;
    fn neg(self) -> ParamRat {
        ParamRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<ParamPoly> for ParamRat {
    fn from(p: ParamPoly) -> Self {
        ParamRat {
            num: p,
            den: ParamPoly::one(),
        }
    }
}

impl From<Rational> for ParamRat {
    fn from(c: Rational) -> Self {
        ParamRat::constant(c)
    }
}

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&PARAM_NAMES))
    }
}

impl fmt::Debug for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ParamRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
