use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::numerics::{format_rational, rat, Rational, RationalMatrix, RationalVector};

use super::in_sol0;

/// Diagonal matrices `D₁ >= 0`, `D₂ = I` with `(D₁A + AᵀD₂)x = 0` for one
/// `x ∈ SOL(0, A)`.
#[derive(Clone, Debug, PartialEq)]
pub struct L2Certificate {
    pub x: RationalVector,
    pub d1: Vec<Rational>,
    pub d2: Vec<Rational>,
}

impl Serialize for L2Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let fmt = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
        let mut st = s.serialize_struct("L2Certificate", 3)?;
        st.serialize_field("x", &self.x)?;
        st.serialize_field("d1", &fmt(&self.d1))?;
        st.serialize_field("d2", &fmt(&self.d2))?;
        st.end()
    }
}

impl L2Certificate {
    pub fn verify(&self, a: &RationalMatrix) -> bool {
        let ax = a.mul_vec(&self.x);
        let d2x: RationalVector = self
            .x
            .iter()
            .zip(&self.d2)
            .map(|(x, d)| x * d)
            .collect::<Vec<_>>()
            .into();
        let at_d2x = a.transpose_mul_vec(&d2x);
        self.d1.iter().all(|d| !d.is_negative())
            && self.d2.iter().all(|d| !d.is_negative())
            && d2x.is_zero() == self.x.is_zero()
            && (0..a.dim()).all(|i| (&self.d1[i] * &ax[i] + &at_d2x[i]).is_zero())
    }
}

/// `D₂ = I` and `(D₁)_ii = -(Aᵀx)_i / (Ax)_i` where `(Ax)_i != 0`, else 0.
pub fn l2_certificate(a: &RationalMatrix, x: &RationalVector) -> Result<L2Certificate, Error> {
    let n = a.dim();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if !in_sol0(a, x) {
        return Err(Error::Precondition(format!("x = {x} is not a solution of LCP(0, A)")));
    }
    let ax = a.mul_vec(x);
    let atx = a.transpose_mul_vec(x);
    let d1: Vec<Rational> = (0..n)
        .map(|i| if ax[i].is_zero() { rat(0) } else { -&atx[i] / &ax[i] })
        .collect();
    let cert = L2Certificate {
        x: x.clone(),
        d1,
        d2: vec![rat(1); n],
    };
    if !cert.verify(a) {
        let bad = (0..n)
            .find(|&i| cert.d1[i].is_negative() || !(&cert.d1[i] * &ax[i] + &atx[i]).is_zero())
            .map_or(0, |i| i + 1);
        return Err(Error::InternalInconsistency(format!(
            "L2 certificate fails at index {bad} for x = {x}; the matrix is not in the tilde class"
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ratio;

    #[test]
    fn certificate_examples() {
        let a = RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 2], [-2, -4, 0]]);
        let c = l2_certificate(&a, &RationalVector::from_i64(&[0, 0, 1])).unwrap();
        assert_eq!(c.d1, vec![rat(2), rat(2), rat(0)]);
        assert!(c.verify(&a));

        let b = RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 2], [-2, -5, 0]]);
        let c = l2_certificate(&b, &RationalVector::from_i64(&[0, 0, 1])).unwrap();
        assert_eq!(c.d1, vec![rat(2), ratio(5, 2), rat(0)]);
    }

    #[test]
    fn zero_vector_gives_zero_d1() {
        let a = RationalMatrix::from_i64(&[[0, 1], [2, 0]]);
        let c = l2_certificate(&a, &RationalVector::zeros(2)).unwrap();
        assert!(c.d1.iter().all(Zero::is_zero));
        assert!(c.verify(&a));
    }

    #[test]
    fn errors() {
        let a = RationalMatrix::identity(2);
        assert!(matches!(
            l2_certificate(&a, &RationalVector::from_i64(&[1, 0])),
            Err(Error::Precondition(_))
        ));
        // e1 solves LCP(0, B) with (Bx)_2 = 0 but (Bᵀx)_2 = 1.
        let b = RationalMatrix::from_i64(&[[0, 1], [0, 1]]);
        let x = RationalVector::from_i64(&[1, 0]);
        assert!(in_sol0(&b, &x));
        assert!(matches!(l2_certificate(&b, &x), Err(Error::InternalInconsistency(_))));
    }
}
