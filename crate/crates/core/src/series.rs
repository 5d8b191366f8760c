//! Truncated Laurent series in tau with rational-function coefficients and
//! an optional log(tau)-multiplied part.
//!
//! Every series carries a provable validity window `[min_exp, order)`:
//! coefficients below `min_exp` are exactly zero, coefficients in the
//! window are stored exactly, and anything at or beyond `order` is unknown.
//! Reads outside the window are hard errors, never silent zeros — residue
//! correctness rides on this discipline. Multiplication shrinks windows
//! pessimistically:
//!
//! ```text
//! (a*b).order = min(a.order + b.min_exp, b.order + a.min_exp)
//! ```
//!
//! Integration maps the tau^-1 coefficient rho to a `rho * log(tau)` term,
//! which is exactly the logarithm certificate the variational machinery
//! looks for.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{ParamRat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("both factors carry log parts (log^2 is outside this pipeline)")]
    LogSquared,
    #[error("integrand carries a log part")]
    LogIntegrand,
    #[error("insufficient order: exponent {needed} not below order {order}")]
    InsufficientOrder { needed: i64, order: i64 },
    #[error("empty validity window [{min_exp}, {order})")]
    EmptyWindow { min_exp: i64, order: i64 },
}

/// Laurent polynomial data with explicit validity window; see module docs.
#[derive(Clone, PartialEq, Eq)]
pub struct LogLaurentSeries {
    plain: BTreeMap<i64, ParamRat>,
    logpart: BTreeMap<i64, ParamRat>,
    min_exp: i64,
    order: i64,
}

impl LogLaurentSeries {
    /// The zero series, known to vanish on the whole window.
    pub fn zero(min_exp: i64, order: i64) -> Self {
        assert!(order > min_exp, "empty window");
        LogLaurentSeries {
            plain: BTreeMap::new(),
            logpart: BTreeMap::new(),
            min_exp,
            order,
        }
    }

    /// c * tau^exp, valid up to `order`.
    pub fn monomial(exp: i64, coeff: ParamRat, order: i64) -> Self {
        assert!(order > exp, "monomial exponent outside window");
        let mut s = LogLaurentSeries::zero(exp, order);
        s.set(exp, coeff);
        s
    }

    pub fn from_plain_terms(
        min_exp: i64,
        order: i64,
        terms: impl IntoIterator<Item = (i64, ParamRat)>,
    ) -> Self {
        let mut s = LogLaurentSeries::zero(min_exp, order);
        for (k, c) in terms {
            assert!(k >= min_exp && k < order, "term outside window");
            s.add_to(k, c);
        }
        s
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn window(&self) -> (i64, i64) {
        (self.min_exp, self.order)
    }

    pub fn has_log(&self) -> bool {
        !self.logpart.is_empty()
    }

    /// True when every coefficient in the window vanishes (both parts).
    pub fn is_zero(&self) -> bool {
        self.plain.is_empty() && self.logpart.is_empty()
    }

    /// Plain coefficient of tau^k; exact zero below the window floor,
    /// `InsufficientOrder` at or beyond `order`.
    pub fn coeff(&self, k: i64) -> Result<ParamRat, SeriesError> {
        if k >= self.order {
            return Err(SeriesError::InsufficientOrder {
                needed: k,
                order: self.order,
            });
        }
        Ok(self.plain.get(&k).cloned().unwrap_or_else(ParamRat::zero))
    }

    /// Coefficient of log(tau) * tau^k.
    pub fn log_coeff(&self, k: i64) -> Result<ParamRat, SeriesError> {
        if k >= self.order {
            return Err(SeriesError::InsufficientOrder {
                needed: k,
                order: self.order,
            });
        }
        Ok(self
            .logpart
            .get(&k)
            .cloned()
            .unwrap_or_else(ParamRat::zero))
    }

    pub fn plain_terms(&self) -> impl Iterator<Item = (&i64, &ParamRat)> {
        self.plain.iter()
    }

    pub fn log_terms(&self) -> impl Iterator<Item = (&i64, &ParamRat)> {
        self.logpart.iter()
    }

    fn set(&mut self, k: i64, c: ParamRat) {
        if c.is_zero() {
            self.plain.remove(&k);
        } else {
            self.plain.insert(k, c);
        }
    }

    fn add_to(&mut self, k: i64, c: ParamRat) {
        if c.is_zero() {
            return;
        }
        let cur = self.plain.remove(&k);
        let next = match cur {
            Some(x) => &x + &c,
            None => c,
        };
        if !next.is_zero() {
            self.plain.insert(k, next);
        }
    }

    fn add_to_log(&mut self, k: i64, c: ParamRat) {
        if c.is_zero() {
            return;
        }
        let cur = self.logpart.remove(&k);
        let next = match cur {
            Some(x) => &x + &c,
            None => c,
        };
        if !next.is_zero() {
            self.logpart.insert(k, next);
        }
    }

    /// Raise the window floor to the first nonzero coefficient. The claim
    /// "zero below min_exp" stays true and product windows improve.
    fn tightened(mut self) -> Self {
        let lowest = self
            .plain
            .keys()
            .next()
            .copied()
            .into_iter()
            .chain(self.logpart.keys().next().copied())
            .min();
        self.min_exp = match lowest {
            Some(k) => k,
            None => self.order - 1,
        };
        self
    }

    pub fn scale(&self, c: &ParamRat) -> Self {
        if c.is_zero() {
            return LogLaurentSeries::zero(self.min_exp, self.order);
        }
        LogLaurentSeries {
            plain: self.plain.iter().map(|(k, v)| (*k, v * c)).collect(),
            logpart: self.logpart.iter().map(|(k, v)| (*k, v * c)).collect(),
            min_exp: self.min_exp,
            order: self.order,
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.scale(&ParamRat::constant(c.clone()))
    }

    pub fn neg(&self) -> Self {
        self.scale_rat(&-&Rational::one())
    }

    /// Multiply every term by tau^k (window shifts with it).
    pub fn shift(&self, k: i64) -> Self {
        LogLaurentSeries {
            plain: self.plain.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            logpart: self
                .logpart
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
            min_exp: self.min_exp + k,
            order: self.order + k,
        }
    }

    /// Restrict the window from above (drops any stored terms beyond).
    pub fn truncated(&self, order: i64) -> Self {
        assert!(order > self.min_exp, "truncation empties the window");
        let order = order.min(self.order);
        LogLaurentSeries {
            plain: self
                .plain
                .iter()
                .filter(|(k, _)| **k < order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            logpart: self
                .logpart
                .iter()
                .filter(|(k, _)| **k < order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            min_exp: self.min_exp,
            order,
        }
    }

    pub fn add(&self, rhs: &LogLaurentSeries) -> LogLaurentSeries {
        let min_exp = self.min_exp.min(rhs.min_exp);
        let order = self.order.min(rhs.order);
        let mut out = LogLaurentSeries::zero(min_exp, order);
        for (k, c) in self.plain.iter().chain(rhs.plain.iter()) {
            if *k < order {
                out.add_to(*k, c.clone());
            }
        }
        for (k, c) in self.logpart.iter().chain(rhs.logpart.iter()) {
            if *k < order {
                out.add_to_log(*k, c.clone());
            }
        }
        out.tightened()
    }

    pub fn sub(&self, rhs: &LogLaurentSeries) -> LogLaurentSeries {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &LogLaurentSeries) -> Result<LogLaurentSeries, SeriesError> {
        if self.has_log() && rhs.has_log() {
            return Err(SeriesError::LogSquared);
        }
        let min_exp = self.min_exp + rhs.min_exp;
        let order = (self.order + rhs.min_exp).min(rhs.order + self.min_exp);
        let mut out = LogLaurentSeries::zero(min_exp, order);
        for (i, a) in &self.plain {
            for (j, b) in &rhs.plain {
                let k = i + j;
                if k < order {
                    out.add_to(k, a * b);
                }
            }
        }
        for (i, a) in &self.plain {
            for (j, b) in &rhs.logpart {
                let k = i + j;
                if k < order {
                    out.add_to_log(k, a * b);
                }
            }
        }
        for (i, a) in &self.logpart {
            for (j, b) in &rhs.plain {
                let k = i + j;
                if k < order {
                    out.add_to_log(k, a * b);
                }
            }
        }
        Ok(out.tightened())
    }

    /// Derivative d/dtau. The log part feeds back into the plain part via
    /// d(log(tau) * f) = f/tau + log(tau) * f'.
    pub fn derivative(&self) -> LogLaurentSeries {
        let mut out = LogLaurentSeries::zero(self.min_exp - 1, self.order - 1);
        for (k, c) in &self.plain {
            out.add_to(k - 1, c.scale(&Rational::from_int(*k)));
        }
        for (k, c) in &self.logpart {
            out.add_to(k - 1, c.clone());
            out.add_to_log(k - 1, c.scale(&Rational::from_int(*k)));
        }
        out.tightened()
    }

    /// Termwise antiderivative with zero integration constant. The tau^-1
    /// term, if present with coefficient rho, becomes `rho * log(tau)`.
    pub fn integrate(&self) -> Result<LogLaurentSeries, SeriesError> {
        if self.has_log() {
            return Err(SeriesError::LogIntegrand);
        }
        let mut out = LogLaurentSeries::zero(self.min_exp + 1, self.order + 1);
        for (k, c) in &self.plain {
            if *k == -1 {
                out.add_to_log(0, c.clone());
            } else {
                out.add_to(
                    k + 1,
                    c.scale(&Rational::new(1, k + 1)),
                );
            }
        }
        Ok(out.tightened())
    }

    /// Coefficient of tau^-1 of the plain part. The window must certify it.
    pub fn residue(&self) -> Result<ParamRat, SeriesError> {
        self.coeff(-1)
    }

    /// Exact equality of all coefficients on the intersection of windows.
    pub fn agrees_with(&self, rhs: &LogLaurentSeries) -> bool {
        self.sub(rhs).is_zero()
    }
}

impl fmt::Display for LogLaurentSeries {
    /// Dump format: one `k: coeff` line per stored exponent, log-part lines
    /// prefixed `log`, and a final `window: [min_exp, order)` line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in &self.plain {
            writeln!(f, "{}: {}", k, c)?;
        }
        for (k, c) in &self.logpart {
            writeln!(f, "log {}: {}", k, c)?;
        }
        write!(f, "window: [{}, {})", self.min_exp, self.order)
    }
}

impl fmt::Debug for LogLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ParamPoly, Var};

    fn rat(n: i64, d: i64) -> ParamRat {
        ParamRat::rat(n, d)
    }

    fn tau_pow(k: i64, n: i64, d: i64, order: i64) -> LogLaurentSeries {
        LogLaurentSeries::monomial(k, rat(n, d), order)
    }

    #[test]
    fn monomial_product_window_rule() {
        // tau^-3 * tau^4/7 = tau/7 with order = min(oa + mb, ob + ma)
        let a = tau_pow(-3, 1, 1, 5); // window [-3, 5)
        let b = tau_pow(4, 1, 7, 10); // window [4, 10)
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coeff(1).unwrap(), rat(1, 7));
        assert_eq!(p.window().1, (5 + 4).min(10 - 3));
        assert_eq!(p.window(), (1, 7));
    }

    #[test]
    fn mul_matches_naive_convolution() {
        // direct convolution oracle on dense rational series
        let a = LogLaurentSeries::from_plain_terms(
            -2,
            3,
            vec![(-2, rat(1, 1)), (-1, rat(3, 2)), (0, rat(-1, 3)), (2, rat(5, 1))],
        );
        let b = LogLaurentSeries::from_plain_terms(
            -1,
            4,
            vec![(-1, rat(2, 1)), (1, rat(-1, 2)), (3, rat(1, 5))],
        );
        let p = a.mul(&b).unwrap();
        let (lo, hi) = p.window();
        for k in lo..hi {
            let mut acc = ParamRat::zero();
            for i in -2..3 {
                let j = k - i;
                if (-1..4).contains(&j) {
                    acc = &acc + &(&a.coeff(i).unwrap() * &b.coeff(j).unwrap());
                }
            }
            assert_eq!(p.coeff(k).unwrap(), acc, "exponent {k}");
        }
    }

    #[test]
    fn mul_commutes() {
        let a = LogLaurentSeries::from_plain_terms(
            -1,
            4,
            vec![(-1, ParamRat::var(Var::A1)), (2, rat(3, 4))],
        );
        let b = LogLaurentSeries::from_plain_terms(
            0,
            3,
            vec![(0, rat(1, 2)), (1, ParamRat::var(Var::B1))],
        );
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn log_squared_rejected() {
        let mut a = LogLaurentSeries::zero(0, 3);
        a.add_to_log(0, rat(1, 1));
        assert!(matches!(a.mul(&a), Err(SeriesError::LogSquared)));
    }

    #[test]
    fn integrate_basic() {
        // tau^-1 -> log(tau)
        let a = tau_pow(-1, 1, 1, 3);
        let int = a.integrate().unwrap();
        assert_eq!(int.log_coeff(0).unwrap(), rat(1, 1));
        assert!(int.coeff(0).unwrap().is_zero());
        // tau^2 -> tau^3/3
        let b = tau_pow(2, 1, 1, 5);
        let ib = b.integrate().unwrap();
        assert_eq!(ib.coeff(3).unwrap(), rat(1, 3));
        assert_eq!(ib.window().1, 6);
    }

    #[test]
    fn integrate_rejects_log() {
        let a = tau_pow(-1, 1, 1, 3).integrate().unwrap();
        assert!(a.has_log());
        assert!(matches!(a.integrate(), Err(SeriesError::LogIntegrand)));
    }

    #[test]
    fn residue_reads() {
        let a = LogLaurentSeries::from_plain_terms(
            -1,
            2,
            vec![(-1, rat(3, 1)), (1, rat(1, 1))],
        );
        assert_eq!(a.residue().unwrap(), rat(3, 1));
        // window floor above -1: residue certified zero
        let b = tau_pow(3, 1, 1, 6);
        assert!(b.residue().unwrap().is_zero());
        // order at or below -1: not certifiable
        let c = LogLaurentSeries::zero(-5, -1);
        assert!(matches!(
            c.residue(),
            Err(SeriesError::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn residue_of_derivative_vanishes() {
        let a = LogLaurentSeries::from_plain_terms(
            -3,
            4,
            vec![
                (-3, ParamRat::var(Var::A1)),
                (-1, rat(7, 2)),
                (0, rat(1, 1)),
                (2, ParamRat::var(Var::H)),
            ],
        );
        assert!(a.derivative().residue().unwrap().is_zero());
    }

    #[test]
    fn derivative_then_integrate_identity() {
        let a = LogLaurentSeries::from_plain_terms(
            -4,
            5,
            vec![(-4, rat(2, 3)), (-2, ParamRat::var(Var::B1)), (3, rat(-1, 7))],
        );
        // no constant term, no tau^-1-antecedent issues
        let back = a.derivative().integrate().unwrap();
        assert!(back.agrees_with(&a));
    }

    #[test]
    fn leibniz_rule() {
        let a = LogLaurentSeries::from_plain_terms(
            -2,
            4,
            vec![(-2, rat(1, 1)), (1, ParamRat::var(Var::C1))],
        );
        let b = LogLaurentSeries::from_plain_terms(
            -1,
            5,
            vec![(-1, rat(2, 5)), (0, rat(1, 1)), (3, ParamRat::var(Var::A1))],
        );
        let lhs = a.mul(&b).unwrap().derivative();
        let rhs = a.derivative().mul(&b).unwrap().add(&a.mul(&b.derivative()).unwrap());
        assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn derivative_handles_log_part() {
        // d/dtau of log(tau) = 1/tau
        let lg = tau_pow(-1, 1, 1, 4).integrate().unwrap();
        let d = lg.derivative();
        assert_eq!(d.coeff(-1).unwrap(), rat(1, 1));
        assert!(!d.has_log());
        // d/dtau (log(tau) * tau^2) = tau + 2 log(tau) tau
        let ltau2 = lg.mul(&tau_pow(2, 1, 1, 9)).unwrap();
        let d2 = ltau2.derivative();
        assert_eq!(d2.coeff(1).unwrap(), rat(1, 1));
        assert_eq!(d2.log_coeff(1).unwrap(), rat(2, 1));
    }

    #[test]
    fn corrupting_beyond_order_never_leaks_into_window() {
        // fuzz the multiplication window rule
        let a = LogLaurentSeries::from_plain_terms(
            -2,
            3,
            vec![(-2, rat(1, 1)), (0, rat(4, 3)), (2, rat(-2, 1))],
        );
        let b = LogLaurentSeries::from_plain_terms(
            -1,
            4,
            vec![(-1, rat(5, 2)), (2, rat(1, 6))],
        );
        let clean = a.mul(&b).unwrap();
        // extend a's window and plant junk at its old order
        for junk in [rat(99, 1), rat(-7, 3)] {
            let mut dirty = LogLaurentSeries::zero(-2, 5);
            for (k, c) in a.plain_terms() {
                dirty.add_to(*k, c.clone());
            }
            dirty.add_to(3, junk.clone());
            dirty.add_to(4, rat(11, 1));
            let p = dirty.mul(&b).unwrap();
            for k in clean.window().0..clean.window().1 {
                assert_eq!(p.coeff(k).unwrap(), clean.coeff(k).unwrap());
            }
        }
    }

    #[test]
    fn dump_format() {
        let mut s = LogLaurentSeries::from_plain_terms(
            -2,
            3,
            vec![(-2, rat(1, 1)), (1, ParamRat::from(ParamPoly::var(Var::A1)))],
        );
        s.add_to_log(0, rat(-3, 5));
        let text = s.to_string();
        assert_eq!(text, "-2: 1\n1: A1\nlog 0: -3/5\nwindow: [-2, 3)");
    }
}
