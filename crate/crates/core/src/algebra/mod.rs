//! Exact scalar, polynomial and rational-function arithmetic over the
//! closed parameter alphabet (A1, B1, C1, h).
//!
//! Everything here is immutable after construction and purely functional,
//! so values can be shared freely across threads.

pub mod poly;
pub mod rational;
pub mod ratfunc;

pub use poly::{Monomial, ParamPoly, Var, NVARS, PARAM_NAMES};
pub use rational::{rational_sqrt, Rational};
pub use ratfunc::{ratfunc_normalize, ParamRat};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative input")]
    NegativeInput,
    #[error("cannot parse rational: {0:?}")]
    ParseError(String),
}

#[cfg(test)]
mod ring_tests {
    use super::poly::{ParamPoly, Var};
    use super::rational::Rational;
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = ParamPoly> {
        // small sparse polynomials in all four variables
        proptest::collection::vec(
            (
                (0u16..3, 0u16..3, 0u16..3, 0u16..2),
                arb_rational(),
            ),
            0..5,
        )
        .prop_map(|terms| {
            ParamPoly::from_terms(terms.into_iter().map(|((a, b, c, h), k)| {
                (super::poly::Monomial([a, b, c, h]), k)
            }))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn add_commutes(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
        }

        #[test]
        fn mul_commutes(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
        }

        #[test]
        fn mul_associates(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        }

        #[test]
        fn distributive(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }

        #[test]
        fn normalize_idempotent(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            let r = super::ratfunc::ratfunc_normalize(p, q).unwrap();
            let again = super::ratfunc::ratfunc_normalize(r.num().clone(), r.den().clone()).unwrap();
            prop_assert_eq!(r, again);
        }

        #[test]
        fn sqrt_of_square(x in arb_rational()) {
            let sq = &x * &x;
            prop_assert_eq!(sq.sqrt().unwrap(), Some(x.abs()));
        }

        #[test]
        fn gcd_divides_both(p in arb_poly(), q in arb_poly()) {
            let g = ParamPoly::gcd(&p, &q);
            if !g.is_zero() {
                prop_assert!(p.exact_div(&g).is_some());
                prop_assert!(q.exact_div(&g).is_some());
            } else {
                prop_assert!(p.is_zero() && q.is_zero());
            }
        }

        #[test]
        fn substitute_then_eval_consistent(p in arb_poly(), a in arb_rational(), b in arb_rational(),
                                           c in arb_rational(), h in arb_rational()) {
            let partial = p.substitute(&[(Var::A1, a.clone()), (Var::B1, b.clone())]);
            let full_direct = p.eval(&[a, b, c.clone(), h.clone()]);
            let full_staged = partial.eval(&[Rational::zero(), Rational::zero(), c, h]);
            prop_assert_eq!(full_direct, full_staged);
        }
    }
}
