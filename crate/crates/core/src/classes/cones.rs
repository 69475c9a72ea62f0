//! Polytopes describing LCP(0, A) one support at a time.
//!
//! For a nonempty support `α` let
//!
//! ```text
//!   C̄_α = { x : x_ᾱ = 0, x_α >= 0, Σ x_α = 1, A_αα x_α = 0, A_ᾱα x_α >= 0 }.
//! ```
//!
//! Every point of `C̄_α` solves LCP(0, A): it is nonnegative, `Ax >= 0`, and
//! `(Ax)_i = 0` wherever `x_i` may be positive, so `xᵀAx = 0`. Conversely a
//! nonzero solution with support `α` is a positive multiple of a point of
//! `C̄_α` (complementarity forces `(Ax)_α = 0`). Points on the boundary of
//! `C̄_α` have smaller supports but are still solutions, so optimizing over the
//! closure is exact for "for all x in SOL(0, A)" statements.

use crate::lp::{lp_feasible, LpProblem};
use crate::numerics::{rat, IndexSet, Rational, RationalMatrix, RationalVector};

/// `A_iα` as LP coefficients over the variables `x_α`.
pub(crate) fn row_on(a: &RationalMatrix, i: usize, alpha: &IndexSet) -> Vec<Rational> {
    alpha.iter().map(|k| a[(i, k)].clone()).collect()
}

/// `(Aᵀx)_i = Σ_k a_ki x_k` as LP coefficients over `x_α`.
pub(crate) fn column_on(a: &RationalMatrix, i: usize, alpha: &IndexSet) -> Vec<Rational> {
    alpha.iter().map(|k| a[(k, i)].clone()).collect()
}

pub(crate) fn sol0_cone(a: &RationalMatrix, alpha: &IndexSet) -> LpProblem {
    let k = alpha.len();
    let mut p = LpProblem::new(k).eq(vec![rat(1); k], rat(1));
    for i in 0..a.dim() {
        let row = row_on(a, i, alpha);
        p = if alpha.contains(i) {
            p.eq(row, rat(0))
        } else {
            p.ge(row, rat(0))
        };
    }
    p
}

/// One normalized representative of each nonempty `C̄_α`, in lexicographic
/// order of `α`.
pub fn sol0_representatives(a: &RationalMatrix) -> Vec<(IndexSet, RationalVector)> {
    let n = a.dim();
    IndexSet::nonempty_subsets(n)
        .into_iter()
        .filter_map(|alpha| {
            let x = lp_feasible(&sol0_cone(a, &alpha))?;
            let full = RationalVector::scatter(&alpha, &x, n);
            Some((alpha, full))
        })
        .collect()
}
