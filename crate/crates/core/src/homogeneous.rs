//! Analysis of the cubic homogeneous part: Darboux points, eigenvalue
//! triples, admissible-value families for degree three, the gap condition
//! for eigenvalue pairs, and the integer searches that cut the candidate
//! set down to alpha1 in {1, 1/2, 1/6, 1/16}.
//!
//! The six degree-three value families, written as quadratics in the
//! integer parameter s:
//!
//! ```text
//! g1(s) = s + 3 s(s-1)/2            g2(s) = -1/24 + (2 + 6s)^2 / 24
//! g3(s) = -1/24 + (3/2 + 6s)^2 / 24 g4(s) = -1/24 + (6/5 + 6s)^2 / 24
//! g5(s) = -1/24 + (12/5 + 6s)^2 /24 g6(s) = 1/3 + 3 s(s+1)/2
//! ```
//!
//! Membership questions are settled exactly by solving the quadratic over
//! the rationals, never by float search; the bounded-enumeration route
//! survives only as a test oracle.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{rational_sqrt, AlgebraError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomogeneousError {
    #[error("alpha1 and gamma1 must be nonzero (separable directions are routed upstream)")]
    ZeroParameter,
    #[error("gap condition discriminant 1 + 24*lambda is negative")]
    NegativeDiscriminant,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which Darboux solution family an eigenvalue triple belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DarbouxFamily {
    /// c1 = 0, c2 = sqrt(2 - 1/gamma1)/(2 gamma1), c3 = 1/(2 gamma1)
    C1ZeroPoint,
    /// c2 = 0, c1 = sqrt(2 - 1/alpha1)/(2 alpha1), c3 = 1/(2 alpha1)
    C2ZeroPoint,
    /// c1 = c2 = 0, c3 = 1
    AxisPoint,
}

/// Eigenvalues of the Hessian of the cubic potential at a Darboux point.
/// The tangential eigenvalue is always k - 1 = 2.
#[derive(Clone, Debug, Serialize)]
pub struct EigenvalueTriple {
    pub source: DarbouxFamily,
    pub lambda1: Rational,
    pub lambda2: Rational,
    pub lambda3: Rational,
    /// Set when the point collapses onto the axis point (2 - 1/gamma1 = 0,
    /// resp. 2 - 1/alpha1 = 0); the eigenvalue formulas remain valid.
    pub degenerate: bool,
}

/// Eigenvalue triples at the three Darboux families of the cubic part.
pub fn darboux_eigenvalues(
    alpha1: &Rational,
    gamma1: &Rational,
) -> Result<Vec<EigenvalueTriple>, HomogeneousError> {
    if alpha1.is_zero() || gamma1.is_zero() {
        return Err(HomogeneousError::ZeroParameter);
    }
    let two = Rational::from_int(2);
    let one = Rational::one();
    let inv_g = gamma1.recip().expect("nonzero");
    let inv_a = alpha1.recip().expect("nonzero");
    Ok(vec![
        EigenvalueTriple {
            source: DarbouxFamily::C1ZeroPoint,
            lambda1: alpha1 / gamma1,
            lambda2: &inv_g - &one,
            lambda3: two.clone(),
            degenerate: (&two - &inv_g).is_zero(),
        },
        EigenvalueTriple {
            source: DarbouxFamily::C2ZeroPoint,
            lambda1: gamma1 / alpha1,
            lambda2: &inv_a - &one,
            lambda3: two.clone(),
            degenerate: (&two - &inv_a).is_zero(),
        },
        EigenvalueTriple {
            source: DarbouxFamily::AxisPoint,
            lambda1: alpha1.clone() * two.clone(),
            lambda2: gamma1.clone() * two.clone(),
            lambda3: two,
            degenerate: false,
        },
    ])
}

/// The six admissible-value families for potential degree three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ValueFamily {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl ValueFamily {
    pub const ALL: [ValueFamily; 6] = [
        ValueFamily::G1,
        ValueFamily::G2,
        ValueFamily::G3,
        ValueFamily::G4,
        ValueFamily::G5,
        ValueFamily::G6,
    ];

    /// Row label in the full admissibility table.
    pub fn table_row(self) -> &'static str {
        match self {
            ValueFamily::G1 => "(1)",
            ValueFamily::G2 => "(11)",
            ValueFamily::G3 => "(12)",
            ValueFamily::G4 => "(13)",
            ValueFamily::G5 => "(14)",
            ValueFamily::G6 => "(18)",
        }
    }

    /// Quadratic coefficients (a, b, c) with value(s) = a s^2 + b s + c.
    pub fn quadratic(self) -> (Rational, Rational, Rational) {
        match self {
            // s + 3 s(s-1)/2 = 3/2 s^2 - 1/2 s
            ValueFamily::G1 => (Rational::new(3, 2), Rational::new(-1, 2), Rational::zero()),
            // -1/24 + (2 + 6s)^2/24 = 3/2 s^2 + s + 1/8
            ValueFamily::G2 => (Rational::new(3, 2), Rational::one(), Rational::new(1, 8)),
            // -1/24 + (3/2 + 6s)^2/24 = 3/2 s^2 + 3/4 s + 5/96
            ValueFamily::G3 => (
                Rational::new(3, 2),
                Rational::new(3, 4),
                Rational::new(5, 96),
            ),
            // -1/24 + (6/5 + 6s)^2/24 = 3/2 s^2 + 3/5 s + 11/600
            ValueFamily::G4 => (
                Rational::new(3, 2),
                Rational::new(3, 5),
                Rational::new(11, 600),
            ),
            // -1/24 + (12/5 + 6s)^2/24 = 3/2 s^2 + 6/5 s + 119/600
            ValueFamily::G5 => (
                Rational::new(3, 2),
                Rational::new(6, 5),
                Rational::new(119, 600),
            ),
            // 1/3 + 3 s(s+1)/2 = 3/2 s^2 + 3/2 s + 1/3
            ValueFamily::G6 => (
                Rational::new(3, 2),
                Rational::new(3, 2),
                Rational::new(1, 3),
            ),
        }
    }

    pub fn eval(self, s: i64) -> Rational {
        let (a, b, c) = self.quadratic();
        let s = Rational::from_int(s);
        &(&(&a * &s) * &s) + &(&(&b * &s) + &c)
    }

    /// All integer s with value(s) = lambda, found by solving the quadratic
    /// exactly (complete for every s, not just a scanned range).
    pub fn solve(self, lambda: &Rational) -> Vec<i64> {
        let (a, b, c) = self.quadratic();
        // a s^2 + b s + (c - lambda) = 0
        let c = &c - lambda;
        let disc = &(&b * &b) - &(&Rational::from_int(4) * &(&a * &c));
        if disc.is_negative() {
            return Vec::new();
        }
        let root = match disc.sqrt().expect("nonnegative") {
            Some(r) => r,
            None => return Vec::new(),
        };
        let two_a = &Rational::from_int(2) * &a;
        let mut out: Vec<i64> = Vec::new();
        for r in [root.clone(), -root] {
            let s = &(&r - &b) / &two_a;
            if let Some(si) = s.to_integer() {
                if !out.contains(&si) {
                    out.push(si);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// A family value hit: evaluating `family` at `s` reproduces the queried
/// eigenvalue exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyHit {
    pub family: ValueFamily,
    pub s: i64,
}

/// All (family, s) pairs with |s| <= s_bound matching `lambda`.
pub fn family_membership(lambda: &Rational, s_bound: i64) -> Vec<FamilyHit> {
    assert!(s_bound >= 1);
    let mut hits = Vec::new();
    for family in ValueFamily::ALL {
        for s in family.solve(lambda) {
            if s.abs() <= s_bound {
                debug_assert_eq!(family.eval(s), lambda.clone());
                hits.push(FamilyHit { family, s });
            }
        }
    }
    hits
}

/// Exact membership irrespective of any bound (used for verdicts).
pub fn in_some_family(lambda: &Rational) -> Option<FamilyHit> {
    ValueFamily::ALL.iter().find_map(|&family| {
        family
            .solve(lambda)
            .first()
            .map(|&s| FamilyHit { family, s })
    })
}

/// Outcome of the degree-three gap condition
/// `sqrt(1 + 24 li)/6 = sqrt(1 + 24 lj)/6 + l` for integer l.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome", content = "l")]
pub enum GapOutcome {
    Satisfied(i64),
    Violated,
    /// A radical is irrational, which itself breaches the necessary
    /// rationality of the eigenvalue data.
    Irrational,
}

pub fn gap_condition(
    lambda_i: &Rational,
    lambda_j: &Rational,
) -> Result<GapOutcome, HomogeneousError> {
    let radicand = |l: &Rational| &Rational::one() + &(&Rational::from_int(24) * l);
    let ri = radicand(lambda_i);
    let rj = radicand(lambda_j);
    if ri.is_negative() || rj.is_negative() {
        return Err(HomogeneousError::NegativeDiscriminant);
    }
    let (si, sj) = match (rational_sqrt(&ri)?, rational_sqrt(&rj)?) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(GapOutcome::Irrational),
    };
    let l = &(&si - &sj) / &Rational::from_int(6);
    match l.to_integer() {
        Some(li) => Ok(GapOutcome::Satisfied(li)),
        None => Ok(GapOutcome::Violated),
    }
}

/// One (s, l) witness in the candidate search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub family: ValueFamily,
    pub s: i64,
    pub l: i64,
    pub alpha1: Rational,
}

/// Result of the candidate search over the equal-parameter line.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateSearch {
    /// Values of alpha1 = gamma1 passing every necessary condition.
    pub candidates: BTreeSet<Rational>,
    /// Witnesses for 1/alpha1 - 1 landing in a value family.
    pub normal_branch_hits: Vec<SearchHit>,
    /// Witnesses for 2 alpha1 landing in a value family.
    pub axis_branch_hits: Vec<SearchHit>,
}

/// Enumerates l with |l| <= l_bound through alpha1 = 24/(23 + (5-6l)^2),
/// then keeps the alpha1 for which both 1/alpha1 - 1 and 2 alpha1 land in
/// some value family with a witness |s| <= s_bound.
pub fn candidate_search(s_bound: i64, l_bound: i64) -> CandidateSearch {
    assert!(s_bound >= 1 && l_bound >= 1);
    let mut out = CandidateSearch {
        candidates: BTreeSet::new(),
        normal_branch_hits: Vec::new(),
        axis_branch_hits: Vec::new(),
    };
    for l in -l_bound..=l_bound {
        let t = Rational::from_int(5 - 6 * l);
        let alpha1 = &Rational::from_int(24) / &(&Rational::from_int(23) + &(&t * &t));
        let lambda_normal = &alpha1.recip().expect("positive") - &Rational::one();
        let lambda_axis = &Rational::from_int(2) * &alpha1;
        let normal = family_membership(&lambda_normal, s_bound);
        let axis = family_membership(&lambda_axis, s_bound);
        if normal.is_empty() || axis.is_empty() {
            continue;
        }
        out.candidates.insert(alpha1.clone());
        for h in normal {
            out.normal_branch_hits.push(SearchHit {
                family: h.family,
                s: h.s,
                l,
                alpha1: alpha1.clone(),
            });
        }
        for h in axis {
            out.axis_branch_hits.push(SearchHit {
                family: h.family,
                s: h.s,
                l,
                alpha1: alpha1.clone(),
            });
        }
    }
    out
}

/// Bounded enumeration of g_j(q) * g_i(s) = 1 over |s|, |q| <= bound.
/// Returns (i-family, s, j-family, q) tuples.
pub fn reciprocal_family_solutions(
    bound: i64,
) -> Vec<(ValueFamily, i64, ValueFamily, i64)> {
    let mut out = Vec::new();
    for fi in ValueFamily::ALL {
        for s in -bound..=bound {
            let v = fi.eval(s);
            if v.is_zero() {
                continue;
            }
            let target = v.recip().expect("nonzero");
            for fj in ValueFamily::ALL {
                for q in fj.solve(&target) {
                    if q.abs() <= bound {
                        out.push((fi, s, fj, q));
                    }
                }
            }
        }
    }
    out
}
