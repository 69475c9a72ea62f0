use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::numerics::{dot, format_rational, IndexSet, Rational, RationalMatrix, RationalVector};

/// LCP(q, A): find `z >= 0` with `w = q + Az >= 0` and `zᵀw = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LcpInstance {
    pub a: RationalMatrix,
    pub q: RationalVector,
}

impl LcpInstance {
    pub fn new(a: RationalMatrix, q: RationalVector) -> Result<Self, Error> {
        if q.len() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: q.len(),
            });
        }
        Ok(LcpInstance { a, q })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// `w = q + Az`.
    pub fn w_of(&self, z: &RationalVector) -> RationalVector {
        let az = self.a.mul_vec(z);
        self.q
            .iter()
            .zip(az.iter())
            .map(|(q, v)| q + v)
            .collect::<Vec<_>>()
            .into()
    }

    pub fn w_of_f64(&self, z: &[f64]) -> Vec<f64> {
        let az = self.a.to_float().mul_vec(z);
        self.q.to_f64().iter().zip(az).map(|(q, v)| q + v).collect()
    }
}

/// Smallest entries of `z` and `w` and the complementarity `zᵀw`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residuals<T> {
    pub min_z: T,
    pub min_w: T,
    pub complementarity: T,
}

/// A point of LCP(q, A) produced by a solver, exact (`T = Rational`) or
/// approximate (`T = f64`).
#[derive(Clone, Debug, PartialEq)]
pub struct LcpSolution<T> {
    pub z: Vec<T>,
    pub w: Vec<T>,
    /// Indices with `z_i > 0`; for approximate points, `z_i > w_i`.
    pub support: IndexSet,
    pub residuals: Residuals<T>,
}

pub type ExactSolution = LcpSolution<Rational>;
pub type FloatSolution = LcpSolution<f64>;

impl LcpSolution<Rational> {
    pub fn exact(inst: &LcpInstance, z: RationalVector) -> Self {
        let w = inst.w_of(&z);
        let residuals = Residuals {
            min_z: z.iter().min().cloned().unwrap_or_default(),
            min_w: w.iter().min().cloned().unwrap_or_default(),
            complementarity: z.dot(&w),
        };
        let support = z.support();
        LcpSolution {
            z: z.into_inner(),
            w: w.into_inner(),
            support,
            residuals,
        }
    }

    pub fn z_vector(&self) -> RationalVector {
        RationalVector(self.z.clone())
    }

    pub fn is_valid(&self) -> bool {
        !self.residuals.min_z.is_negative()
            && !self.residuals.min_w.is_negative()
            && self.residuals.complementarity.is_zero()
    }

    pub fn to_float(&self) -> FloatSolution {
        let f = |v: &[Rational]| RationalVector(v.to_vec()).to_f64();
        let r = &self.residuals;
        LcpSolution {
            z: f(&self.z),
            w: f(&self.w),
            support: self.support.clone(),
            residuals: Residuals {
                min_z: crate::numerics::to_f64(&r.min_z),
                min_w: crate::numerics::to_f64(&r.min_w),
                complementarity: crate::numerics::to_f64(&r.complementarity),
            },
        }
    }
}

impl LcpSolution<f64> {
    /// Builds the approximate solution with `w` recomputed as `q + Az`.
    pub fn approximate(inst: &LcpInstance, z: Vec<f64>) -> Self {
        let w = inst.w_of_f64(&z);
        let min = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
        let residuals = Residuals {
            min_z: min(&z),
            min_w: min(&w),
            complementarity: dot(&z, &w),
        };
        let support = IndexSet::new((0..z.len()).filter(|&i| z[i] > w[i]).collect(), z.len()).expect("in range");
        LcpSolution {
            z,
            w,
            support,
            residuals,
        }
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        self.residuals.min_z >= -tol && self.residuals.min_w >= -tol && self.residuals.complementarity.abs() <= tol
    }
}

impl Serialize for LcpSolution<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let f = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
        let r = &self.residuals;
        let mut st = s.serialize_struct("LcpSolution", 4)?;
        st.serialize_field("z", &f(&self.z))?;
        st.serialize_field("w", &f(&self.w))?;
        st.serialize_field("support", &self.support)?;
        st.serialize_field(
            "residuals",
            &Residuals {
                min_z: format_rational(&r.min_z),
                min_w: format_rational(&r.min_w),
                complementarity: format_rational(&r.complementarity),
            },
        )?;
        st.end()
    }
}

impl Serialize for LcpSolution<f64> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LcpSolution", 4)?;
        st.serialize_field("z", &self.z)?;
        st.serialize_field("w", &self.w)?;
        st.serialize_field("support", &self.support)?;
        st.serialize_field("residuals", &self.residuals)?;
        st.end()
    }
}

/// Exact check of a rational candidate.
pub fn check_exact(inst: &LcpInstance, z: &RationalVector) -> (bool, Residuals<Rational>) {
    let s = LcpSolution::exact(inst, z.clone());
    (s.is_valid(), s.residuals)
}

/// `z >= -tol`, `q + Az >= -tol` and `|zᵀ(q + Az)| <= tol`.
pub fn check_approx(inst: &LcpInstance, z: &[f64], tol: f64) -> (bool, Residuals<f64>) {
    let s = LcpSolution::approximate(inst, z.to_vec());
    (s.is_valid(tol), s.residuals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ratio;

    pub(crate) fn worked_instance() -> LcpInstance {
        LcpInstance::new(
            RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 2], [-2, -5, 0]]),
            RationalVector::from_i64(&[-4, -7, 10]),
        )
        .unwrap()
    }

    #[test]
    fn exact_checks() {
        let inst = worked_instance();
        let z = RationalVector(vec![ratio(15, 14), ratio(11, 7), ratio(17, 7)]);
        let (ok, r) = check_exact(&inst, &z);
        assert!(ok);
        assert!(r.complementarity.is_zero());
        let (ok, _) = check_exact(&inst, &RationalVector::zeros(3));
        assert!(!ok);
    }

    #[test]
    fn approximate_checks() {
        let inst = worked_instance();
        let (ok, _) = check_approx(&inst, &[15.0 / 14.0, 11.0 / 7.0, 17.0 / 7.0], 1e-9);
        assert!(ok);
        let (ok, _) = check_approx(&inst, &[1.0, 1.0, 5.0], 1e-4);
        assert!(!ok);
    }

    #[test]
    fn mismatched_dimensions() {
        let e = LcpInstance::new(RationalMatrix::identity(2), RationalVector::zeros(3));
        assert_eq!(e, Err(Error::DimensionMismatch { expected: 2, found: 3 }));
    }
}
