//! Principal pivot transforms.
//!
//! For a nonsingular block `A_αα` the transform `M` exchanges the roles of
//! `w_α` and `z_α` in `w = q + Az`:
//!
//! ```text
//!   M_αα = A_αα⁻¹            M_αᾱ = -A_αα⁻¹ A_αᾱ
//!   M_ᾱα = A_ᾱα A_αα⁻¹       M_ᾱᾱ = A_ᾱᾱ - A_ᾱα A_αα⁻¹ A_αᾱ
//! ```
//!
//! Blocks are written back at their original index positions.

use num_traits::Zero;

use crate::error::Error;
use crate::numerics::{IndexSet, Rational, RationalMatrix, RationalVector};

#[derive(Clone, Debug, PartialEq)]
pub struct PptResult {
    pub m: RationalMatrix,
    pub alpha: IndexSet,
    pub legitimate: bool,
}

fn pivot_inverse(a: &RationalMatrix, alpha: &IndexSet) -> Result<RationalMatrix, Error> {
    if let Some(bad) = alpha.iter().find(|&i| i >= a.dim()) {
        return Err(Error::IndexOutOfRange {
            index: bad + 1,
            n: a.dim(),
        });
    }
    a.principal_submatrix(alpha)?
        .inverse()
        .ok_or_else(|| Error::IllegitimatePivot { alpha: alpha.clone() })
}

pub fn ppt_transform(a: &RationalMatrix, alpha: &IndexSet) -> Result<PptResult, Error> {
    if alpha.is_empty() {
        return Ok(PptResult {
            m: a.clone(),
            alpha: alpha.clone(),
            legitimate: true,
        });
    }
    let n = a.dim();
    let inv = pivot_inverse(a, alpha)?;
    let pos: Vec<Option<usize>> = (0..n).map(|i| alpha.position(i)).collect();
    let mut m = RationalMatrix::zeros(n);

    // Rows in α first: M_αα and M_αᾱ.
    for i in alpha.iter() {
        let pi = pos[i].unwrap();
        for j in 0..n {
            m[(i, j)] = match pos[j] {
                Some(pj) => inv[(pi, pj)].clone(),
                None => -alpha
                    .iter()
                    .enumerate()
                    .map(|(pk, k)| &inv[(pi, pk)] * &a[(k, j)])
                    .sum::<Rational>(),
            };
        }
    }
    // Rows in ᾱ: M_ᾱα = A_ᾱα A_αα⁻¹ and M_ᾱᾱ = A_ᾱᾱ + A_ᾱα M_αᾱ.
    for i in (0..n).filter(|&i| pos[i].is_none()) {
        for j in 0..n {
            let value = match pos[j] {
                Some(pj) => alpha
                    .iter()
                    .enumerate()
                    .map(|(pk, k)| &a[(i, k)] * &inv[(pk, pj)])
                    .sum::<Rational>(),
                None => {
                    let mut v = a[(i, j)].clone();
                    for k in alpha.iter() {
                        if !a[(i, k)].is_zero() {
                            v += &a[(i, k)] * &m[(k, j)];
                        }
                    }
                    v
                }
            };
            m[(i, j)] = value;
        }
    }
    Ok(PptResult {
        m,
        alpha: alpha.clone(),
        legitimate: true,
    })
}

/// Transformed right-hand side: `q'_α = -A_αα⁻¹ q_α`,
/// `q'_ᾱ = q_ᾱ - A_ᾱα A_αα⁻¹ q_α`.
pub fn ppt_rhs(q: &RationalVector, a: &RationalMatrix, alpha: &IndexSet) -> Result<RationalVector, Error> {
    let n = a.dim();
    if q.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: q.len(),
        });
    }
    if alpha.is_empty() {
        return Ok(q.clone());
    }
    let inv = pivot_inverse(a, alpha)?;
    let q_alpha = q.gather(alpha);
    // t = A_αα⁻¹ q_α
    let t: Vec<Rational> = (0..alpha.len())
        .map(|pi| (0..alpha.len()).map(|pk| &inv[(pi, pk)] * &q_alpha[pk]).sum())
        .collect();
    let mut out = q.clone();
    for (pi, i) in alpha.iter().enumerate() {
        out[i] = -t[pi].clone();
    }
    for i in alpha.complement(n).iter() {
        let s: Rational = alpha.iter().enumerate().map(|(pk, k)| &a[(i, k)] * &t[pk]).sum();
        out[i] = &q[i] - s;
    }
    Ok(out)
}

/// Every `α` (including the empty set) with `det A_αα != 0`, lexicographically.
pub fn enumerate_legitimate(a: &RationalMatrix) -> Vec<IndexSet> {
    IndexSet::all_subsets(a.dim())
        .into_iter()
        .filter(|alpha| alpha.is_empty() || !a.principal_submatrix(alpha).expect("in range").determinant().is_zero())
        .collect()
}

/// Maps a `(z, w)` pair of the original problem to the pivoted problem's
/// variables: `ẑ = (w_α, z_ᾱ)`, `ŵ = (z_α, w_ᾱ)`. The map is its own inverse.
pub fn exchange(z: &RationalVector, w: &RationalVector, alpha: &IndexSet) -> (RationalVector, RationalVector) {
    let mut zh = z.clone();
    let mut wh = w.clone();
    for i in alpha.iter() {
        zh[i] = w[i].clone();
        wh[i] = z[i].clone();
    }
    (zh, wh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rat, ratio};

    #[test]
    fn full_pivot_is_inverse() {
        let a = RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 1], [-1, -1, 0]]);
        let r = ppt_transform(&a, &IndexSet::full(3)).unwrap();
        let expected = RationalMatrix::from_i64(&[[-1, 1, -1], [1, -1, -2], [2, 1, 2]]).scale(&ratio(1, 3));
        assert_eq!(r.m, expected);
        assert!(r.legitimate);
    }

    #[test]
    fn empty_pivot_is_identity_map() {
        let a = RationalMatrix::from_i64(&[[0, 1], [2, 0]]);
        assert_eq!(ppt_transform(&a, &IndexSet::empty()).unwrap().m, a);
        let q = RationalVector::from_i64(&[1, -2]);
        assert_eq!(ppt_rhs(&q, &a, &IndexSet::empty()).unwrap(), q);
    }

    #[test]
    fn zero_pivot_is_illegitimate() {
        let a = RationalMatrix::from_i64(&[[0, 1], [2, 0]]);
        let alpha = IndexSet::singleton(0);
        assert_eq!(ppt_transform(&a, &alpha), Err(Error::IllegitimatePivot { alpha }));
    }

    #[test]
    fn identity_pivot_negates_rhs() {
        let a = RationalMatrix::identity(3);
        let q = RationalVector::from_i64(&[1, -2, 3]);
        let alpha = IndexSet::from_one_based(&[1, 3], 3).unwrap();
        assert_eq!(
            ppt_rhs(&q, &a, &alpha).unwrap(),
            RationalVector::from_i64(&[-1, -2, -3])
        );
    }

    #[test]
    fn full_pivot_rhs_is_solution() {
        let a = RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 2], [-2, -5, 0]]);
        let q = RationalVector::from_i64(&[-4, -7, 10]);
        let q2 = ppt_rhs(&q, &a, &IndexSet::full(3)).unwrap();
        assert_eq!(q2, RationalVector(vec![ratio(15, 14), ratio(11, 7), ratio(17, 7)]));
        let neg_q: RationalVector = q.iter().map(|v| -v).collect::<Vec<_>>().into();
        assert_eq!(a.solve(&neg_q).unwrap(), q2);
    }

    #[test]
    fn legitimate_enumeration() {
        assert_eq!(enumerate_legitimate(&RationalMatrix::identity(2)).len(), 4);
        let names: Vec<String> = enumerate_legitimate(&RationalMatrix::from_i64(&[[0, 1], [2, 0]]))
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(names, ["{}", "{1,2}"]);
        assert_eq!(enumerate_legitimate(&RationalMatrix::zeros(3)), vec![IndexSet::empty()]);
    }

    #[test]
    fn single_pivot_block_formulas() {
        let a = RationalMatrix::from_i64(&[[2, 1], [4, 3]]);
        let m = ppt_transform(&a, &IndexSet::singleton(0)).unwrap().m;
        // M11 = 1/2, M12 = -1/2, M21 = 2, M22 = 3 - 4*1/2 = 1
        assert_eq!(m[(0, 0)], ratio(1, 2));
        assert_eq!(m[(0, 1)], ratio(-1, 2));
        assert_eq!(m[(1, 0)], rat(2));
        assert_eq!(m[(1, 1)], rat(1));
    }
}
