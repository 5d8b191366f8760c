//! Sparse multivariate polynomials over the fixed parameter alphabet.
//!
//! The alphabet is closed: four indeterminates ordered `A1 > B1 > C1 > h`.
//! Monomials are exponent vectors `[u16; 4]`; term order is graded
//! lexicographic, used only for canonicalisation (leading terms, display,
//! denominator normalisation). No Groebner machinery.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;

pub const NVARS: usize = 4;

/// One of the four parameter indeterminates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    A1 = 0,
    B1 = 1,
    C1 = 2,
    H = 3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::A1, Var::B1, Var::C1, Var::H];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Default display names; callers with a different alphabet reading
/// (the tilde parameters of the phase-space module) pass their own.
pub const PARAM_NAMES: [&str; NVARS] = ["A1", "B1", "C1", "h"];

/// Exponent vector under graded lexicographic order with A1 > B1 > C1 > h.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] + other.0[i];
        }
        Monomial(e)
    }

    /// Componentwise division, `None` if any exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            // within a degree, lexicographic with A1 highest
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in (A1, B1, C1, h) with `Rational` coefficients.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        ParamPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        ParamPoly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = ParamPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// The constant value if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::ONE).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.0[v.index()]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = ParamPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute concrete values for a subset of the variables.
    pub fn substitute(&self, vals: &[(Var, Rational)]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        'term: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = *m;
            for (v, val) in vals {
                let e = rest.0[v.index()];
                if e > 0 {
                    if val.is_zero() {
                        continue 'term;
                    }
                    coeff *= val.pow(e as i32);
                    rest.0[v.index()] = 0;
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Evaluate with all four variables bound.
    pub fn eval(&self, vals: &[Rational; NVARS]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..NVARS {
                let e = m.0[i];
                if e > 0 {
                    t *= vals[i].pow(e as i32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficient extraction: view as a polynomial in `v` and return the
    /// coefficient of `v^k` (a polynomial in the remaining variables).
    pub fn coeff_of(&self, v: Var, k: u16) -> ParamPoly {
        let i = v.index();
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut rest = *m;
                rest.0[i] = 0;
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn exact_div(&self, d: &ParamPoly) -> Option<ParamPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip().expect("nonzero")));
        }
        let (dm, dc) = d.leading().expect("nonzero divisor");
        let dm = *dm;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quo = ParamPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let t = ParamPoly::monomial(qm, qc);
            rem = &rem - &(&t * d);
            quo = &quo + &t;
        }
        Some(quo)
    }

    /// Divide every coefficient so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> ParamPoly {
        match self.leading() {
            None => ParamPoly::zero(),
            Some((_, c)) => self.scale(&c.recip().expect("nonzero leading coefficient")),
        }
    }

    /// GCD over Q[A1,B1,C1,h], normalised monic. gcd(0, p) = monic(p);
    /// any nonzero constant input makes the gcd 1.
    pub fn gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return ParamPoly::one();
        }
        // main variable: the highest-index variable in use keeps recursion depth bounded
        let v = Var::ALL
            .iter()
            .rev()
            .copied()
            .find(|&v| a.uses_var(v) || b.uses_var(v))
            .expect("non-constant polynomials use some variable");
        if !a.uses_var(v) || !b.uses_var(v) {
            // one side is free of the main variable: gcd divides the other's content
            let (with, without) = if a.uses_var(v) { (a, b) } else { (b, a) };
            let cont = with.content(v);
            return ParamPoly::gcd(&cont, without);
        }
        let ca = a.content(v);
        let cb = b.content(v);
        let pa = a.exact_div(&ca).expect("content divides");
        let pb = b.exact_div(&cb).expect("content divides");
        let prim = ParamPoly::primitive_gcd(pa, pb, v);
        (&ParamPoly::gcd(&ca, &cb) * &prim).monic()
    }

    /// Content with respect to `v`: gcd of the coefficients of powers of `v`.
    fn content(&self, v: Var) -> ParamPoly {
        let mut g = ParamPoly::zero();
        for k in 0..=self.degree_in(v) {
            let c = self.coeff_of(v, k);
            if !c.is_zero() {
                g = ParamPoly::gcd(&g, &c);
                if g.is_constant() {
                    return ParamPoly::one();
                }
            }
        }
        g
    }

    /// Primitive PRS on `v`-primitive inputs.
    fn primitive_gcd(mut a: ParamPoly, mut b: ParamPoly, v: Var) -> ParamPoly {
        if a.degree_in(v) < b.degree_in(v) {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = ParamPoly::pseudo_rem(&a, &b, v);
            a = b;
            b = if r.is_zero() {
                ParamPoly::zero()
            } else {
                let cont = r.content(v);
                r.exact_div(&cont).expect("content divides")
            };
        }
        let cont = a.content(v);
        a.exact_div(&cont).expect("content divides")
    }

    /// Pseudo-remainder of `a` by `b` in the variable `v`.
    fn pseudo_rem(a: &ParamPoly, b: &ParamPoly, v: Var) -> ParamPoly {
        let db = b.degree_in(v);
        let lb = b.coeff_of(v, db);
        let mut r = a.clone();
        while !r.is_zero() {
            let dr = r.degree_in(v);
            if dr < db {
                break;
            }
            let lr = r.coeff_of(v, dr);
            // r <- lb*r - lr * v^(dr-db) * b
            let shift = ParamPoly::monomial(
                {
                    let mut e = [0; NVARS];
                    e[v.index()] = dr - db;
                    Monomial(e)
                },
                Rational::one(),
            );
            r = &(&r * &lb) - &(&(&lr * &shift) * b);
        }
        r
    }

    /// Rendered with the given variable names (used by the phase-space
    /// module, whose coefficient alphabet reads differently).
    pub fn display_with(&self, names: &[&str; NVARS]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // descending graded-lex: leading term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.total_degree() == 0 {
                factors.push(mag.to_string());
            }
            for (j, name) in names.iter().enumerate() {
                match m.0[j] {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    e => factors.push(format!("{}^{}", name, e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&PARAM_NAMES))
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convenience: p/q constant polynomial.
pub fn pc(n: i64, d: i64) -> ParamPoly {
    ParamPoly::constant(Rational::new(n, d))
}

#[allow(unused)]
pub(crate) fn is_unit_normalized(p: &ParamPoly) -> bool {
    match p.leading() {
        None => true,
        Some((_, c)) => c.is_one(),
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> ParamPoly {
        ParamPoly::var(Var::A1)
    }
    fn b1() -> ParamPoly {
        ParamPoly::var(Var::B1)
    }
    fn c1() -> ParamPoly {
        ParamPoly::var(Var::C1)
    }

    #[test]
    fn grlex_leading_term() {
        // A1^2 vs B1^3: degree wins
        let p = &a1().pow(2) + &b1().pow(3);
        assert_eq!(p.leading().unwrap().0, &Monomial([0, 3, 0, 0]));
        // same degree: A1 > B1
        let q = &(&a1() * &b1()) + &b1().pow(2);
        assert_eq!(q.leading().unwrap().0, &Monomial([1, 1, 0, 0]));
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&a1() - &b1()) * &(&a1() + &b1());
        let expect = &a1().pow(2) - &b1().pow(2);
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "A1^2 - B1^2");
        assert_eq!(ParamPoly::zero().to_string(), "0");
        assert_eq!(pc(-3, 2).to_string(), "-3/2");
    }

    #[test]
    fn exact_division() {
        let num = &a1().pow(2) - &c1().pow(2);
        let den = &a1() - &c1();
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, &a1() + &c1());
        assert!((&a1() + &pc(1, 1)).exact_div(&b1()).is_none());
    }

    #[test]
    fn gcd_cancels_common_factor() {
        let g = &(&a1() - &c1()) * &(&b1() + &pc(2, 1));
        let x = &g * &a1();
        let y = &g * &(&b1() - &c1());
        let d = ParamPoly::gcd(&x, &y);
        // monic normalisation: leading coefficient 1
        assert_eq!(d, g.monic());
        assert!(x.exact_div(&d).is_some());
        assert!(y.exact_div(&d).is_some());
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(ParamPoly::gcd(&a1(), &b1()), ParamPoly::one());
        let p = &a1() + &b1();
        let q = &a1() - &b1();
        assert_eq!(ParamPoly::gcd(&p, &q), ParamPoly::one());
    }

    #[test]
    fn substitution() {
        let p = &(&a1() * &b1()) + &c1();
        let s = p.substitute(&[(Var::A1, Rational::new(2, 1))]);
        assert_eq!(s, &b1().scale(&Rational::new(2, 1)) + &c1());
        let full = p.eval(&[
            Rational::new(2, 1),
            Rational::new(3, 1),
            Rational::new(5, 1),
            Rational::zero(),
        ]);
        assert_eq!(full, Rational::new(11, 1));
    }
}
