//! Exact-arithmetic integrability analysis for the three dimensional
//! generalized Henon-Heiles family
//!
//! ```text
//! H = 1/2 (p1^2 + p2^2 + p3^2) + 1/2 (A q1^2 + C q2^2 + B q3^2)
//!     + (alpha q1^2 + gamma q2^2) q3 + beta/3 q3^3
//! ```
//!
//! The crate classifies parameter tuples as known-integrable or certifies
//! non-integrability with exact, machine-checkable evidence: eigenvalue
//! table misses at Darboux points, violated constraints for elliptic
//! (Lame-type) normal variational equations, or nonzero residues of
//! third-order variational integrands. All arithmetic is exact; no floats
//! appear anywhere in a verdict path.
//!
//! Module map:
//! - [`algebra`]: rationals, sparse polynomials, rational functions in
//!   the parameter alphabet (A1, B1, C1, h)
//! - [`series`]: truncated Laurent series in tau with an optional log(tau)
//!   part and hard validity windows
//! - [`weierstrass`]: Laurent expansion of the Weierstrass P-function and
//!   the straight-line family of particular solutions
//! - [`homogeneous`]: Darboux points, eigenvalue tables, admissible-value
//!   families and the candidate search over the cubic homogeneous part
//! - [`lame`]: elliptic-equation coefficient data and its classification
//! - [`variational`]: Frobenius fundamental pairs, higher variational
//!   right-hand sides, variation of constants and residue certificates
//! - [`poisson`]: symbolic Poisson brackets and first-integral checks
//! - [`cli`]: the decision pipeline and report serialization

pub mod algebra;
pub mod cli;
pub mod homogeneous;
pub mod lame;
pub mod poisson;
pub mod series;
pub mod variational;
pub mod weierstrass;

pub use algebra::{ParamPoly, ParamRat, Rational, Var};
pub use series::LogLaurentSeries;
