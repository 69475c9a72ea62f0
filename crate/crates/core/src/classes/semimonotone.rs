//! Semimonotone (E₀) and strictly semimonotone (E) tests.
//!
//! `A ∉ E₀` iff some support `α` admits `x_α > 0` with `A_αα x_α < 0`. Both
//! sides are homogeneous, so scaling any such `x_α` up gives an equivalent
//! closed system `{x_α >= 1, A_αα x_α <= -1}`, which the LP kernel decides
//! exactly. For `E` only the conclusion is weak: `{x_α >= 1, A_αα x_α <= 0}`.

use crate::lp::{lp_feasible, LpProblem};
use crate::numerics::{rat, IndexSet, RationalMatrix, RationalVector};

use super::cones::row_on;
use super::{ClassVerdict, Violation};

fn support_system(a: &RationalMatrix, alpha: &IndexSet, rhs: i64) -> LpProblem {
    let mut p = LpProblem::new(alpha.len());
    for k in 0..alpha.len() {
        p = p.lower_bound(k, rat(1));
    }
    for i in alpha.iter() {
        p = p.le(row_on(a, i, alpha), rat(rhs));
    }
    p
}

fn first_violation(a: &RationalMatrix, rhs: i64) -> Option<RationalVector> {
    IndexSet::nonempty_subsets(a.dim()).into_iter().find_map(|alpha| {
        lp_feasible(&support_system(a, &alpha, rhs)).map(|x| RationalVector::scatter(&alpha, &x, a.dim()))
    })
}

pub fn is_semimonotone(a: &RationalMatrix) -> ClassVerdict {
    match first_violation(a, -1) {
        Some(x) => ClassVerdict::violated(Violation::NegativeOnSupport { x }),
        None => ClassVerdict::member(),
    }
}

pub fn is_strictly_semimonotone(a: &RationalMatrix) -> ClassVerdict {
    match first_violation(a, 0) {
        Some(x) => ClassVerdict::violated(Violation::NonpositiveOnSupport { x }),
        None => ClassVerdict::member(),
    }
}
