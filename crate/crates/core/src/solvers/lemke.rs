//! Lemke's complementary pivoting method in exact arithmetic.
//!
//! The tableau holds `B⁻¹[I, -A, -d | q]` for the system `w - Az - d z₀ = q`.
//! Columns `0..n` are `w`, `n..2n` are `z` and `2n` is `z₀`. Because the
//! initial basis is `I`, the first `n` columns always hold `B⁻¹`, which feeds
//! the lexicographic ratio test.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::numerics::{rat, Rational, RationalVector};

use super::instance::{ExactSolution, LcpInstance, LcpSolution};

const PIVOT_LIMIT: usize = 100_000;

/// Secondary ray: from `(z, w, z0)` the points `(z, w, z0) + t (dz, dw, dz0)`
/// stay feasible for the augmented system for every `t >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LemkeRay {
    pub z: RationalVector,
    pub w: RationalVector,
    pub z0: Rational,
    pub dz: RationalVector,
    pub dw: RationalVector,
    pub dz0: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LemkeOutcome {
    Solution(ExactSolution),
    Ray(LemkeRay),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LemkeRun {
    pub outcome: LemkeOutcome,
    pub pivots: usize,
    /// Sorted basic variable indices after each pivot.
    pub bases: Vec<Vec<usize>>,
}

struct Tableau {
    n: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn new(inst: &LcpInstance, d: &RationalVector) -> Self {
        let n = inst.dim();
        let rows = (0..n)
            .map(|i| {
                let mut row = vec![rat(0); 2 * n + 1];
                row[i] = rat(1);
                for j in 0..n {
                    row[n + j] = -inst.a[(i, j)].clone();
                }
                row[2 * n] = -d[i].clone();
                row
            })
            .collect();
        Tableau {
            n,
            rows,
            rhs: inst.q.0.clone(),
            basis: (0..n).collect(),
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.n {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    /// `(rhs_i, B⁻¹_i) / scale` compared lexicographically.
    fn lex_cmp(&self, i: usize, si: &Rational, k: usize, sk: &Rational) -> Ordering {
        let key = |row: usize, s: &Rational, j: usize| -> Rational {
            if j == 0 {
                &self.rhs[row] / s
            } else {
                &self.rows[row][j - 1] / s
            }
        };
        (0..=self.n)
            .map(|j| key(i, si, j).cmp(&key(k, sk, j)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// Leaving row for entering column `c`, or `None` for a ray.
    fn ratio_test(&self, c: usize) -> Option<usize> {
        let candidates: Vec<usize> = (0..self.n).filter(|&i| self.rows[i][c].is_positive()).collect();
        let min_ratio = candidates.iter().map(|&i| &self.rhs[i] / &self.rows[i][c]).min()?;
        let z0 = 2 * self.n;
        if let Some(&i) = candidates
            .iter()
            .find(|&&i| self.basis[i] == z0 && &self.rhs[i] / &self.rows[i][c] == min_ratio)
        {
            return Some(i);
        }
        candidates.into_iter().reduce(
            |best, i| match self.lex_cmp(i, &self.rows[i][c], best, &self.rows[best][c]) {
                Ordering::Less => i,
                _ => best,
            },
        )
    }

    fn value_of(&self, var: usize) -> Rational {
        self.basis
            .iter()
            .position(|&b| b == var)
            .map_or_else(|| rat(0), |r| self.rhs[r].clone())
    }

    fn sorted_basis(&self) -> Vec<usize> {
        let mut b = self.basis.clone();
        b.sort_unstable();
        b
    }
}

fn complement(var: usize, n: usize) -> usize {
    if var < n {
        var + n
    } else {
        var - n
    }
}

pub fn solve_lemke(inst: &LcpInstance) -> Result<LemkeRun, Error> {
    solve_lemke_with(inst, &RationalVector(vec![rat(1); inst.dim()]))
}

pub fn solve_lemke_with(inst: &LcpInstance, covering: &RationalVector) -> Result<LemkeRun, Error> {
    let n = inst.dim();
    if covering.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: covering.len(),
        });
    }
    if covering.iter().any(|v| !v.is_positive()) {
        return Err(Error::InvalidParameter("covering vector must be positive".into()));
    }
    if inst.q.is_nonnegative() {
        let outcome = LemkeOutcome::Solution(LcpSolution::exact(inst, RationalVector::zeros(n)));
        return Ok(LemkeRun {
            outcome,
            pivots: 0,
            bases: vec![(0..n).collect()],
        });
    }

    let mut t = Tableau::new(inst, covering);
    let z0 = 2 * n;
    let mut bases = vec![t.sorted_basis()];
    // First pivot: z₀ enters at the level that makes every w nonnegative.
    let first = (0..n)
        .filter(|&i| t.rhs[i].is_negative())
        .reduce(|best, i| match t.lex_cmp(i, &covering[i], best, &covering[best]) {
            Ordering::Less => i,
            _ => best,
        })
        .expect("q has a negative entry");
    let mut entering = complement(t.basis[first], n);
    t.pivot(first, z0);
    bases.push(t.sorted_basis());
    let mut pivots = 1;

    loop {
        if pivots > PIVOT_LIMIT {
            return Err(Error::InternalInconsistency("Lemke pivot limit exceeded".into()));
        }
        let Some(r) = t.ratio_test(entering) else {
            let ray = ray_from(&t, entering);
            return Ok(LemkeRun {
                outcome: LemkeOutcome::Ray(ray),
                pivots,
                bases,
            });
        };
        let leaving = t.basis[r];
        t.pivot(r, entering);
        pivots += 1;
        bases.push(t.sorted_basis());
        if leaving == z0 {
            let z = RationalVector((0..n).map(|j| t.value_of(n + j)).collect());
            let s = LcpSolution::exact(inst, z);
            if !s.is_valid() {
                return Err(Error::InternalInconsistency(
                    "Lemke terminated at an invalid point".into(),
                ));
            }
            return Ok(LemkeRun {
                outcome: LemkeOutcome::Solution(s),
                pivots,
                bases,
            });
        }
        entering = complement(leaving, n);
    }
}

fn ray_from(t: &Tableau, entering: usize) -> LemkeRay {
    let n = t.n;
    let mut dir = vec![rat(0); 2 * n + 1];
    dir[entering] = rat(1);
    for (r, &b) in t.basis.iter().enumerate() {
        dir[b] = -t.rows[r][entering].clone();
    }
    let point: Vec<Rational> = (0..=2 * n).map(|v| t.value_of(v)).collect();
    LemkeRay {
        w: RationalVector(point[..n].to_vec()),
        z: RationalVector(point[n..2 * n].to_vec()),
        z0: point[2 * n].clone(),
        dw: RationalVector(dir[..n].to_vec()),
        dz: RationalVector(dir[n..2 * n].to_vec()),
        dz0: dir[2 * n].clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{ratio, RationalMatrix};

    fn run(a: RationalMatrix, q: &[i64]) -> LemkeRun {
        solve_lemke(&LcpInstance::new(a, RationalVector::from_i64(q)).unwrap()).unwrap()
    }

    #[test]
    fn three_by_three_solution() {
        // This instance has three solutions; the all-ones covering vector
        // first pivots on row 2 and ends at (0, 2, 7/2).
        let r = run(
            RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 2], [-2, -5, 0]]),
            &[-4, -7, 10],
        );
        match r.outcome {
            LemkeOutcome::Solution(s) => assert_eq!(s.z, vec![rat(0), rat(2), ratio(7, 2)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nonnegative_q_needs_no_pivot() {
        let r = run(RationalMatrix::from_i64(&[[-1, 2], [3, -4]]), &[0, 5]);
        assert_eq!(r.pivots, 0);
        assert!(matches!(r.outcome, LemkeOutcome::Solution(ref s) if s.z.iter().all(Zero::is_zero)));
    }

    #[test]
    fn infeasible_instance_ends_on_ray() {
        let a = RationalMatrix::from_i64(&[[0, -1], [-1, 0]]);
        let r = run(a.clone(), &[-1, -1]);
        let LemkeOutcome::Ray(ray) = r.outcome else {
            panic!("expected a ray")
        };
        // The ray stays feasible for w - Az - d z0 = q.
        let t = rat(7);
        let z: RationalVector = ray
            .z
            .iter()
            .zip(ray.dz.iter())
            .map(|(a, b)| a + &t * b)
            .collect::<Vec<_>>()
            .into();
        let w: RationalVector = ray
            .w
            .iter()
            .zip(ray.dw.iter())
            .map(|(a, b)| a + &t * b)
            .collect::<Vec<_>>()
            .into();
        let z0 = &ray.z0 + &t * &ray.dz0;
        assert!(z.is_nonnegative() && w.is_nonnegative() && !z0.is_negative());
        let az = a.mul_vec(&z);
        for i in 0..2 {
            assert_eq!(&w[i] - &az[i] - &z0, rat(-1));
        }
    }

    #[test]
    fn degenerate_ties_do_not_cycle() {
        let r = run(
            RationalMatrix::from_i64(&[[1, 2, 0], [0, 1, 2], [2, 0, 1]]),
            &[-1, -1, -1],
        );
        let mut seen = r.bases.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), r.bases.len());
        assert!(matches!(r.outcome, LemkeOutcome::Solution(ref s) if s.is_valid()));
    }

    #[test]
    fn covering_vector_is_validated() {
        let inst = LcpInstance::new(RationalMatrix::identity(2), RationalVector::from_i64(&[-1, -1])).unwrap();
        assert!(solve_lemke_with(&inst, &RationalVector::from_i64(&[1, 0])).is_err());
        let r = solve_lemke_with(&inst, &RationalVector::from_i64(&[1, 3])).unwrap();
        assert!(matches!(r.outcome, LemkeOutcome::Solution(ref s) if s.z == vec![rat(1), rat(1)]));
    }
}
