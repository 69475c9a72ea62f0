use num_traits::Signed;

use crate::error::Error;
use crate::lp::{lp_feasible, LpProblem};
use crate::numerics::{IndexSet, Rational, RationalVector};

use super::instance::{ExactSolution, LcpInstance, LcpSolution};

pub const MAX_ENUMERATION_DIM: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct Enumeration {
    /// Distinct solutions, in lexicographic order of the support tried.
    pub solutions: Vec<ExactSolution>,
    /// False only when LCP(q, A) has no solution at all.
    pub solvable: bool,
}

/// Tries every complementary basis: for each `α`, solve `A_αα z_α = -q_α` and
/// keep `z` when `z_α >= 0` and `q_ᾱ + A_ᾱα z_α >= 0`.
///
/// When no basis yields a solution, each support with a singular `A_αα` is
/// also searched by LP, so `solvable` is exact even for degenerate problems.
pub fn solve_enumerate(inst: &LcpInstance) -> Result<Enumeration, Error> {
    let n = inst.dim();
    if n > MAX_ENUMERATION_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            max: MAX_ENUMERATION_DIM,
        });
    }
    let mut solutions: Vec<ExactSolution> = Vec::new();
    let mut singular = Vec::new();
    for alpha in IndexSet::all_subsets(n) {
        let z = if alpha.is_empty() {
            Some(RationalVector::zeros(n))
        } else {
            let sub = inst.a.principal_submatrix(&alpha)?;
            let rhs: RationalVector = inst.q.gather(&alpha).into_iter().map(|v| -v).collect::<Vec<_>>().into();
            match sub.solve(&rhs) {
                Some(za) => Some(RationalVector::scatter(&alpha, &za, n)),
                None => {
                    singular.push(alpha.clone());
                    None
                }
            }
        };
        if let Some(z) = z {
            push_if_solution(inst, z, &mut solutions);
        }
    }
    if solutions.is_empty() {
        for alpha in singular {
            if let Some(z) = lp_on_support(inst, &alpha) {
                push_if_solution(inst, z, &mut solutions);
                break;
            }
        }
    }
    let solvable = !solutions.is_empty();
    Ok(Enumeration { solutions, solvable })
}

fn push_if_solution(inst: &LcpInstance, z: RationalVector, out: &mut Vec<ExactSolution>) {
    if z.iter().any(Rational::is_negative) {
        return;
    }
    let s = LcpSolution::exact(inst, z);
    if s.is_valid() && !out.iter().any(|t| t.z == s.z) {
        out.push(s);
    }
}

/// `{z_α >= 0, (q + Az)_α = 0, (q + Az)_ᾱ >= 0}` with `z_ᾱ = 0`.
fn lp_on_support(inst: &LcpInstance, alpha: &IndexSet) -> Option<RationalVector> {
    let n = inst.dim();
    let mut p = LpProblem::new(alpha.len());
    for i in 0..n {
        let row: Vec<Rational> = alpha.iter().map(|k| inst.a[(i, k)].clone()).collect();
        let rhs = -inst.q[i].clone();
        p = if alpha.contains(i) {
            p.eq(row, rhs)
        } else {
            p.ge(row, rhs)
        };
    }
    lp_feasible(&p).map(|x| RationalVector::scatter(alpha, &x, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{ratio, RationalMatrix};

    #[test]
    fn all_solutions_of_three_by_three() {
        let inst = LcpInstance::new(
            RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 2], [-2, -5, 0]]),
            RationalVector::from_i64(&[-4, -7, 10]),
        )
        .unwrap();
        let e = solve_enumerate(&inst).unwrap();
        assert!(e.solvable);
        // Checked by hand: w = (0,0,0), (0,11,0) and (3/2,0,0) respectively.
        let zs: Vec<Vec<Rational>> = e.solutions.iter().map(|s| s.z.clone()).collect();
        assert_eq!(
            zs,
            vec![
                vec![ratio(15, 14), ratio(11, 7), ratio(17, 7)],
                vec![ratio(5, 1), ratio(0, 1), ratio(4, 1)],
                vec![ratio(0, 1), ratio(2, 1), ratio(7, 2)],
            ]
        );
        assert!(e.solutions[0].w.iter().all(|v| *v == ratio(0, 1)));
    }

    #[test]
    fn nonnegative_q_has_zero_solution() {
        let inst = LcpInstance::new(
            RationalMatrix::from_i64(&[[1, -3], [2, -1]]),
            RationalVector::from_i64(&[1, 0]),
        )
        .unwrap();
        let e = solve_enumerate(&inst).unwrap();
        assert_eq!(e.solutions[0].z, RationalVector::zeros(2).into_inner());
    }

    #[test]
    fn infeasible_instance() {
        let inst = LcpInstance::new(
            RationalMatrix::from_i64(&[[0, -1], [-1, 0]]),
            RationalVector::from_i64(&[-1, -1]),
        )
        .unwrap();
        let e = solve_enumerate(&inst).unwrap();
        assert!(!e.solvable && e.solutions.is_empty());
    }

    #[test]
    fn singular_blocks() {
        let inst = LcpInstance::new(
            RationalMatrix::from_i64(&[[0, 0], [0, 0]]),
            RationalVector::from_i64(&[0, 0]),
        )
        .unwrap();
        assert!(solve_enumerate(&inst).unwrap().solvable);
        let inst = LcpInstance::new(
            RationalMatrix::from_i64(&[[1, 1], [1, 1]]),
            RationalVector::from_i64(&[-1, -1]),
        )
        .unwrap();
        let e = solve_enumerate(&inst).unwrap();
        assert!(e.solvable);
        assert!(e.solutions.iter().all(|s| s.is_valid()));
    }

    #[test]
    fn dimension_cap() {
        let inst = LcpInstance::new(RationalMatrix::identity(21), RationalVector::zeros(21)).unwrap();
        assert_eq!(solve_enumerate(&inst), Err(Error::DimensionTooLarge { n: 21, max: 20 }));
    }
}
