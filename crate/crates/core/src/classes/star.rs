//! Star-type conditions on the solutions of LCP(0, A): the star property,
//! semimonotone star (E₀ˢ), its refinement Ẽ₀ˢ, the complete version, and R₀.
//!
//! All of them quantify over SOL(0, A), which is covered exactly by the
//! per-support polytopes of [`super::cones`].

use num_traits::{Signed, Zero};

use crate::lp::{lp_feasible, lp_solve, LpOutcome};
use crate::numerics::{rat, IndexSet, RationalMatrix, RationalVector};

use super::cones::{column_on, row_on, sol0_cone};
use super::semimonotone::is_semimonotone;
use super::{ClassVerdict, Violation};

/// `x ∈ SOL(0, A) ⟹ Aᵀx <= 0`. For each support and each coordinate `i`
/// the maximum of `(Aᵀx)_i` over `C̄_α` must be nonpositive.
pub fn star_property(a: &RationalMatrix) -> ClassVerdict {
    let n = a.dim();
    for alpha in IndexSet::nonempty_subsets(n) {
        let cone = sol0_cone(a, &alpha);
        if lp_feasible(&cone).is_none() {
            continue;
        }
        for i in 0..n {
            let p = cone.clone().maximize(column_on(a, i, &alpha));
            if let LpOutcome::Optimal { value, point } = lp_solve(&p) {
                if value.is_positive() {
                    let x = RationalVector::scatter(&alpha, &point, n);
                    return ClassVerdict::violated(Violation::StarViolated { x, index: i });
                }
            }
        }
    }
    ClassVerdict::member()
}

/// E₀ˢ: semimonotone with the star property.
pub fn is_e0s(a: &RationalMatrix) -> ClassVerdict {
    let e0 = is_semimonotone(a);
    if !e0.member {
        return e0;
    }
    star_property(a)
}

/// On SOL(0, A), `(Ax)_i = 0 ⟹ (Aᵀx)_i = 0` for every `i`.
///
/// For `i ∈ α` the premise holds on all of `C̄_α`; otherwise the polytope is
/// cut by `(Ax)_i = 0`. Both the maximum and the minimum of `(Aᵀx)_i` over
/// the resulting set must vanish.
pub fn tilde_condition(a: &RationalMatrix) -> ClassVerdict {
    let n = a.dim();
    for alpha in IndexSet::nonempty_subsets(n) {
        let cone = sol0_cone(a, &alpha);
        if lp_feasible(&cone).is_none() {
            continue;
        }
        for i in 0..n {
            let mut region = cone.clone();
            if !alpha.contains(i) {
                region = region.eq(row_on(a, i, &alpha), rat(0));
            }
            let objective = column_on(a, i, &alpha);
            for maximize in [true, false] {
                let p = if maximize {
                    region.clone().maximize(objective.clone())
                } else {
                    region.clone().minimize(objective.clone())
                };
                match lp_solve(&p) {
                    LpOutcome::Optimal { value, point } if !value.is_zero() => {
                        let x = RationalVector::scatter(&alpha, &point, n);
                        return ClassVerdict::violated(Violation::TildeViolated { x, index: i });
                    }
                    _ => {}
                }
            }
        }
    }
    ClassVerdict::member()
}

/// Ẽ₀ˢ: E₀ˢ together with [`tilde_condition`].
pub fn is_e0s_tilde(a: &RationalMatrix) -> ClassVerdict {
    let base = is_e0s(a);
    if !base.member {
        return base;
    }
    tilde_condition(a)
}

/// Every principal submatrix (including `A` itself) is E₀ˢ.
pub fn is_completely_e0s(a: &RationalMatrix) -> ClassVerdict {
    for rows in IndexSet::nonempty_subsets(a.dim()) {
        let sub = a.principal_submatrix(&rows).expect("in range");
        let v = is_e0s(&sub);
        if let Some(inner) = v.violation {
            return ClassVerdict::violated(Violation::Submatrix {
                rows,
                inner: Box::new(inner),
            });
        }
    }
    ClassVerdict::member()
}

/// R₀: LCP(0, A) has only the zero solution, i.e. every `C̄_α` is empty.
pub fn is_r0(a: &RationalMatrix) -> ClassVerdict {
    let n = a.dim();
    for alpha in IndexSet::nonempty_subsets(n) {
        if let Some(x) = lp_feasible(&sol0_cone(a, &alpha)) {
            let x = RationalVector::scatter(&alpha, &x, n);
            return ClassVerdict::violated(Violation::NontrivialZeroSolution { x });
        }
    }
    ClassVerdict::member()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3(rows: [[i64; 3]; 3]) -> RationalMatrix {
        RationalMatrix::from_i64(&rows)
    }

    #[test]
    fn star_examples() {
        let a = m3([[0, 1, 1], [2, 0, 1], [-1, -1, 0]]);
        assert!(star_property(&a).member);
        assert!(is_e0s(&a).member);

        let sym = a.add(&a.transpose());
        assert_eq!(sym, m3([[0, 3, 0], [3, 0, 0], [0, 0, 0]]));
        let v = star_property(&sym);
        assert!(!v.member);
        assert!(v.verify(&sym));

        let b = RationalMatrix::from_i64(&[[0, 1], [2, 0]]);
        let v = star_property(&b);
        assert!(!v.member);
        assert_eq!(v.witness().unwrap(), &RationalVector::from_i64(&[1, 0]));
    }

    #[test]
    fn sum_with_transpose_witness_is_second_unit_vector() {
        // x = e2 gives Ax = (3,0,0) >= 0, xᵀAx = 0 and Aᵀx = (3,0,0).
        let sym = m3([[0, 3, 0], [3, 0, 0], [0, 0, 0]]);
        let v = Violation::StarViolated {
            x: RationalVector::from_i64(&[0, 1, 0]),
            index: 0,
        };
        assert!(v.verify(&sym));
        assert!(!is_e0s(&sym).member);
    }

    #[test]
    fn e0s_examples() {
        assert!(is_e0s(&RationalMatrix::from_i64(&[[0, -5], [2, 0]])).member);
        assert!(is_e0s(&RationalMatrix::from_i64(&[[0, 3], [-1, 0]])).member);
        let at = m3([[0, 2, -1], [1, 0, -1], [1, 1, 0]]);
        let v = is_e0s(&at);
        assert!(!v.member && v.verify(&at));
    }

    #[test]
    fn tilde_examples() {
        assert!(is_e0s_tilde(&m3([[0, 1, 1], [2, 0, 2], [-2, -4, 0]])).member);
        assert!(is_e0s_tilde(&m3([[0, 1, 1], [2, 0, 2], [-2, -5, 0]])).member);

        let a = m3([[1, -1, -2], [-1, 1, 0], [0, 0, 1]]);
        assert!(is_e0s(&a).member);
        let v = is_e0s_tilde(&a);
        assert!(!v.member);
        assert!(v.verify(&a));
        match v.violation.unwrap() {
            Violation::TildeViolated { x, index } => {
                assert_eq!(index, 2);
                assert_eq!(x[0], x[1]);
                assert!(x[2].is_zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn completely_e0s() {
        assert!(is_completely_e0s(&RationalMatrix::identity(3)).member);
        let a = m3([[0, 1, 1], [2, 0, 1], [-4, -5, 0]]);
        assert!(is_e0s(&a).member);
        let v = is_completely_e0s(&a);
        assert!(!v.member);
        assert!(v.verify(&a));
        match v.violation.as_ref().unwrap() {
            Violation::Submatrix { rows, .. } => assert_eq!(rows.to_string(), "{1,2}"),
            other => panic!("{other:?}"),
        }
        assert!(is_completely_e0s(&m3([[2, 0, 0], [0, 0, 0], [0, 0, 5]])).member);
    }

    #[test]
    fn r0_examples() {
        assert!(is_r0(&m3([[0, 2, 1], [1, 0, 1], [-2, -2, 1]])).member);
        let v = is_r0(&m3([[0, 1, 1], [2, 0, 2], [-4, -5, 0]]));
        assert!(!v.member);
        assert_eq!(v.witness().unwrap(), &RationalVector::from_i64(&[0, 0, 1]));
        assert!(is_r0(&RationalMatrix::identity(3)).member);
    }
}
