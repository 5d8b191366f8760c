//! Laurent expansion of the Weierstrass P-function and the straight-line
//! particular solution family it generates.
//!
//! P(tau; g2, g3) satisfies (P')^2 = 4 P^3 - g2 P - g3 and expands as
//!
//! ```text
//! P = tau^-2 + c2 tau^2 + c3 tau^4 + ...,   c2 = g2/20, c3 = g3/28,
//! c_k = 3 / ((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}   (k >= 4)
//! ```
//!
//! The recurrence is not taken on trust: the defining-ODE residual is a
//! test invariant, checked for random invariants and for the symbolic
//! family values g2 = 3 B1^2, g3 = 12 h - B1^3.

use serde::Serialize;

use crate::algebra::{ParamRat, Rational, Var};
use crate::series::LogLaurentSeries;

/// Invariants (g2, g3) of the elliptic curve behind an expansion.
#[derive(Clone, Debug, Serialize)]
pub struct EllipticInvariants {
    pub g2: ParamRat,
    pub g3: ParamRat,
}

impl EllipticInvariants {
    pub fn new(g2: ParamRat, g3: ParamRat) -> Self {
        EllipticInvariants { g2, g3 }
    }

    /// The family values: g2 = 3 B1^2 and g3 = 12 h - B1^3 with B1 and the
    /// energy h symbolic, so every series statement holds for the whole
    /// energy pencil at once.
    pub fn family() -> Self {
        let b1 = ParamRat::var(Var::B1);
        let h = ParamRat::var(Var::H);
        let g2 = (&b1 * &b1).scale(&Rational::from_int(3));
        let g3 = &h.scale(&Rational::from_int(12)) - &(&(&b1 * &b1) * &b1);
        EllipticInvariants { g2, g3 }
    }

    /// g2^3 - 27 g3^2; a vanishing discriminant means the curve is
    /// degenerate and the expansion machinery only advisorily applies.
    pub fn discriminant(&self) -> ParamRat {
        let g2cubed = &(&self.g2 * &self.g2) * &self.g2;
        let g3sq = (&self.g3 * &self.g3).scale(&Rational::from_int(27));
        &g2cubed - &g3sq
    }
}

/// Laurent expansion of P at tau = 0, valid on `[-2, order)`.
pub fn wp_series(inv: &EllipticInvariants, order: i64) -> LogLaurentSeries {
    assert!(order >= 3, "order must be at least 3");
    // c[k] holds c_k for k >= 2
    let mut c: Vec<ParamRat> = vec![ParamRat::zero(); 2];
    c.push(inv.g2.scale(&Rational::new(1, 20)));
    c.push(inv.g3.scale(&Rational::new(1, 28)));
    // highest k with exponent 2k-2 inside the window
    let k_max = ((order + 1) / 2).max(3);
    for k in 4..=k_max {
        let mut acc = ParamRat::zero();
        for m in 2..=(k - 2) {
            acc = &acc + &(&c[m as usize] * &c[(k - m) as usize]);
        }
        c.push(acc.scale(&Rational::new(3, (2 * k + 1) * (k - 3))));
    }
    let mut terms = vec![(-2, ParamRat::one())];
    for k in 2..=k_max {
        let exp = 2 * k - 2;
        if exp < order {
            terms.push((exp, c[k as usize].clone()));
        }
    }
    LogLaurentSeries::from_plain_terms(-2, order, terms)
}

/// The straight-line solution q3(tau) = -B1/2 + P(tau; 3 B1^2, 12 h - B1^3).
/// `b1` is usually the symbol B1 itself; h stays symbolic in the invariants.
pub fn gamma_h_solution(b1: &ParamRat, order: i64) -> LogLaurentSeries {
    let g2 = (b1 * b1).scale(&Rational::from_int(3));
    let g3 = &ParamRat::var(Var::H).scale(&Rational::from_int(12)) - &(&(b1 * b1) * b1);
    let wp = wp_series(&EllipticInvariants::new(g2, g3), order);
    let shift = LogLaurentSeries::monomial(0, b1.scale(&Rational::new(-1, 2)), order);
    wp.add(&shift)
}
