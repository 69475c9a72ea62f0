//! Copositivity and positive semidefiniteness, both decided on the symmetric
//! part `S = (A + Aᵀ)/2` since `xᵀAx = xᵀSx`.
//!
//! Copositivity uses one stationarity LP per face of the standard simplex:
//!
//! ```text
//!   min λ  s.t.  2 S_αα x_α = λ e,  eᵀx_α = 1,  x_α >= 0.
//! ```
//!
//! A minimizer of `xᵀSx` over the simplex satisfies the KKT conditions, so on
//! its support it is feasible for that face's LP with `λ = 2 xᵀSx`. Any
//! feasible point has `xᵀSx = λ/2`, so a negative optimum is a direct
//! counterexample and the face enumeration is exact.

use num_traits::{Signed, Zero};

use crate::lp::{lp_solve, LpOutcome, LpProblem};
use crate::numerics::{rat, IndexSet, Rational, RationalMatrix, RationalVector};

use super::star::star_property;
use super::{ClassVerdict, Violation};

fn face_problem(s: &RationalMatrix, alpha: &IndexSet) -> LpProblem {
    let k = alpha.len();
    let mut objective = vec![rat(0); k + 1];
    objective[k] = rat(1);
    let mut p = LpProblem::new(k + 1).free(k).minimize(objective);
    let mut simplex = vec![rat(1); k + 1];
    simplex[k] = rat(0);
    p = p.eq(simplex, rat(1));
    for i in alpha.iter() {
        let mut row: Vec<Rational> = alpha.iter().map(|j| &s[(i, j)] * rat(2)).collect();
        row.push(rat(-1));
        p = p.eq(row, rat(0));
    }
    p
}

pub fn is_copositive(a: &RationalMatrix) -> ClassVerdict {
    let n = a.dim();
    let s = a.symmetric_part();
    for alpha in IndexSet::nonempty_subsets(n) {
        if let LpOutcome::Optimal { value, point } = lp_solve(&face_problem(&s, &alpha)) {
            if value.is_negative() {
                let x = RationalVector::scatter(&alpha, &point[..alpha.len()], n);
                return ClassVerdict::violated(Violation::NegativeQuadraticOnOrthant { x });
            }
        }
    }
    ClassVerdict::member()
}

/// C₀*: copositive with the star property.
pub fn is_copositive_star(a: &RationalMatrix) -> ClassVerdict {
    let c = is_copositive(a);
    if !c.member {
        return c;
    }
    star_property(a)
}

/// Positive semidefiniteness of the symmetric part by symmetric Gaussian
/// elimination. A failure returns `x` with `xᵀAx < 0`.
pub fn is_psd_symmetric_part(a: &RationalMatrix) -> ClassVerdict {
    match negative_direction(a.symmetric_part()) {
        Some(x) => ClassVerdict::violated(Violation::NegativeQuadratic { x }),
        None => ClassVerdict::member(),
    }
}

/// Returns `x` with `xᵀSx < 0` for symmetric `S`, or `None` if `S` is PSD.
fn negative_direction(s: RationalMatrix) -> Option<RationalVector> {
    let n = s.dim();
    if let Some(i) = (0..n).find(|&i| s[(i, i)].is_negative()) {
        return Some(RationalVector::unit(n, i));
    }
    // Zero diagonal with a nonzero off-diagonal entry: x = t e_i + e_j gives
    // xᵀSx = 2 t s_ij + s_jj, which is -1 for the t below.
    for i in (0..n).filter(|&i| s[(i, i)].is_zero()) {
        if let Some(j) = (0..n).find(|&j| j != i && !s[(i, j)].is_zero()) {
            let mut x = RationalVector::unit(n, j);
            x[i] = -(&s[(j, j)] + rat(1)) / (&s[(i, j)] * rat(2));
            return Some(x);
        }
    }
    let k = (0..n).find(|&i| s[(i, i)].is_positive())?;
    if n == 1 {
        return None;
    }
    // Schur complement on the remaining indices; a negative direction y for
    // it lifts to x with x_k = -(s_k · y)/s_kk, preserving the quadratic form.
    let rest = IndexSet::singleton(k).complement(n);
    let pivot = s[(k, k)].clone();
    let mut entries = Vec::with_capacity((n - 1) * (n - 1));
    for i in rest.iter() {
        for j in rest.iter() {
            entries.push(&s[(i, j)] - &s[(i, k)] * &s[(k, j)] / &pivot);
        }
    }
    let schur = RationalMatrix::new(n - 1, entries).expect("square");
    let y = negative_direction(schur)?;
    let mut x = RationalVector::scatter(&rest, &y, n);
    let coupling: Rational = rest.iter().zip(y.iter()).map(|(j, yj)| &s[(k, j)] * yj).sum();
    x[k] = -coupling / pivot;
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ratio;

    #[test]
    fn copositive_examples() {
        assert!(is_copositive(&RationalMatrix::identity(3)).member);
        assert!(is_copositive(&RationalMatrix::from_i64(&[[0, 3], [3, 0]])).member);

        let a = RationalMatrix::from_i64(&[[0, -5], [2, 0]]);
        let v = is_copositive(&a);
        assert!(!v.member && v.verify(&a));
        let x = v.witness().unwrap();
        assert_eq!(x, &RationalVector(vec![ratio(1, 2), ratio(1, 2)]));
        assert_eq!(x.dot(&a.mul_vec(x)), ratio(-3, 4));
    }

    #[test]
    fn copositive_but_not_psd() {
        // Nonnegative but indefinite.
        let a = RationalMatrix::from_i64(&[[0, 1], [1, 0]]);
        assert!(is_copositive(&a).member);
        let v = is_psd_symmetric_part(&a);
        assert!(!v.member && v.verify(&a));
    }

    #[test]
    fn copositive_star_examples() {
        assert!(is_copositive_star(&RationalMatrix::identity(3)).member);
        assert!(is_copositive_star(&RationalMatrix::from_i64(&[[2, 0], [0, 2]])).member);
        let a = RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 2], [-2, -4, 0]]);
        let v = is_copositive_star(&a);
        assert!(!v.member && v.verify(&a));
    }

    #[test]
    fn psd_examples() {
        assert!(is_psd_symmetric_part(&RationalMatrix::identity(3)).member);
        // Skew part is ignored.
        assert!(is_psd_symmetric_part(&RationalMatrix::from_i64(&[[1, 5], [-5, 1]])).member);
        assert!(is_psd_symmetric_part(&RationalMatrix::from_i64(&[[1, 1], [1, 1]])).member);
        assert!(is_psd_symmetric_part(&RationalMatrix::zeros(2)).member);
        for a in [
            RationalMatrix::from_i64(&[[1, 2], [2, 1]]),
            RationalMatrix::from_i64(&[[2, -1, 0], [-1, 2, -3], [0, -3, 2]]),
            RationalMatrix::from_i64(&[[-1]]),
            RationalMatrix::from_i64(&[[0, 1, 0], [0, 0, 0], [0, 0, 1]]),
        ] {
            let v = is_psd_symmetric_part(&a);
            assert!(!v.member && v.verify(&a), "{a}");
        }
    }
}
