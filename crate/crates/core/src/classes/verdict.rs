use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::numerics::{format_rational, IndexSet, Rational, RationalMatrix, RationalVector};

/// A concrete, exactly checkable reason why a matrix is not in a class.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `0 != x >= 0` with `(Ax)_i < 0` for every `i` in the support of `x`.
    NegativeOnSupport { x: RationalVector },
    /// `0 != x >= 0` with `(Ax)_i <= 0` for every `i` in the support of `x`.
    NonpositiveOnSupport { x: RationalVector },
    /// `0 != x` in SOL(0, A) with `(Aᵀx)_index > 0`.
    StarViolated { x: RationalVector, index: usize },
    /// `x` in SOL(0, A) with `(Ax)_index = 0` but `(Aᵀx)_index != 0`.
    TildeViolated { x: RationalVector, index: usize },
    /// The principal submatrix on `rows` violates the class; `inner` is
    /// expressed in the submatrix's own coordinates.
    Submatrix { rows: IndexSet, inner: Box<Violation> },
    /// `det A_αα < 0`.
    NegativeMinor {
        alpha: IndexSet,
        #[serde(serialize_with = "ser_rational")]
        det: Rational,
    },
    /// `det A_αα <= 0`.
    NonpositiveMinor {
        alpha: IndexSet,
        #[serde(serialize_with = "ser_rational")]
        det: Rational,
    },
    /// `x >= 0` with `xᵀAx < 0`.
    NegativeQuadraticOnOrthant { x: RationalVector },
    /// `xᵀAx < 0` for an arbitrary `x`.
    NegativeQuadratic { x: RationalVector },
    /// A nonzero solution of LCP(0, A).
    NontrivialZeroSolution { x: RationalVector },
    /// `a_ij > 0` with `i != j`.
    PositiveOffDiagonal { row: usize, col: usize },
    /// `x_i (Bx)_i <= 0` for all `i`, not all zero, where `B = A` or `B = Aᵀ`.
    NotColumnSufficient { x: RationalVector, transposed: bool },
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// `x >= 0`, `Ax >= 0` and `xᵀAx = 0`.
pub fn in_sol0(a: &RationalMatrix, x: &RationalVector) -> bool {
    let ax = a.mul_vec(x);
    x.is_nonnegative() && ax.is_nonnegative() && x.dot(&ax).is_zero()
}

fn quadratic(a: &RationalMatrix, x: &RationalVector) -> Rational {
    x.dot(&a.mul_vec(x))
}

impl Violation {
    /// Re-checks the violation against `a` from the class definitions alone.
    pub fn verify(&self, a: &RationalMatrix) -> bool {
        let n = a.dim();
        let len_ok = |x: &RationalVector| x.len() == n;
        match self {
            Violation::NegativeOnSupport { x } => {
                let ax = a.mul_vec(x);
                len_ok(x)
                    && x.is_nonnegative()
                    && !x.is_zero()
                    && (0..n).all(|i| !x[i].is_positive() || ax[i].is_negative())
            }
            Violation::NonpositiveOnSupport { x } => {
                let ax = a.mul_vec(x);
                len_ok(x)
                    && x.is_nonnegative()
                    && !x.is_zero()
                    && (0..n).all(|i| !x[i].is_positive() || !ax[i].is_positive())
            }
            Violation::StarViolated { x, index } => {
                len_ok(x) && *index < n && !x.is_zero() && in_sol0(a, x) && a.transpose_mul_vec(x)[*index].is_positive()
            }
            Violation::TildeViolated { x, index } => {
                len_ok(x)
                    && *index < n
                    && in_sol0(a, x)
                    && a.mul_vec(x)[*index].is_zero()
                    && !a.transpose_mul_vec(x)[*index].is_zero()
            }
            Violation::Submatrix { rows, inner } => match a.principal_submatrix(rows) {
                Ok(sub) => inner.verify(&sub),
                Err(_) => false,
            },
            Violation::NegativeMinor { alpha, det } => minor(a, alpha).is_some_and(|d| d == *det && d.is_negative()),
            Violation::NonpositiveMinor { alpha, det } => {
                minor(a, alpha).is_some_and(|d| d == *det && !d.is_positive())
            }
            Violation::NegativeQuadraticOnOrthant { x } => {
                len_ok(x) && x.is_nonnegative() && quadratic(a, x).is_negative()
            }
            Violation::NegativeQuadratic { x } => len_ok(x) && quadratic(a, x).is_negative(),
            Violation::NontrivialZeroSolution { x } => len_ok(x) && !x.is_zero() && in_sol0(a, x),
            Violation::PositiveOffDiagonal { row, col } => {
                row != col && *row < n && *col < n && a[(*row, *col)].is_positive()
            }
            Violation::NotColumnSufficient { x, transposed } => {
                if !len_ok(x) {
                    return false;
                }
                let bx = if *transposed {
                    a.transpose_mul_vec(x)
                } else {
                    a.mul_vec(x)
                };
                let products: Vec<Rational> = x.iter().zip(bx.iter()).map(|(u, v)| u * v).collect();
                products.iter().all(|p| !p.is_positive()) && products.iter().any(|p| !p.is_zero())
            }
        }
    }

    /// The witness vector, if the violation carries one (in the coordinates
    /// of the matrix it refers to).
    pub fn witness(&self) -> Option<&RationalVector> {
        match self {
            Violation::NegativeOnSupport { x }
            | Violation::NonpositiveOnSupport { x }
            | Violation::StarViolated { x, .. }
            | Violation::TildeViolated { x, .. }
            | Violation::NegativeQuadraticOnOrthant { x }
            | Violation::NegativeQuadratic { x }
            | Violation::NontrivialZeroSolution { x }
            | Violation::NotColumnSufficient { x, .. } => Some(x),
            Violation::Submatrix { inner, .. } => inner.witness(),
            _ => None,
        }
    }

    /// Short human-readable description, 1-based indices.
    pub fn describe(&self) -> String {
        match self {
            Violation::NegativeOnSupport { x } => format!("x = {x} has (Ax)_i < 0 on its whole support"),
            Violation::NonpositiveOnSupport { x } => format!("x = {x} has (Ax)_i <= 0 on its whole support"),
            Violation::StarViolated { x, index } => {
                format!("x = {x} solves LCP(0,A) but (A^T x)_{} > 0", index + 1)
            }
            Violation::TildeViolated { x, index } => {
                format!("x = {x} solves LCP(0,A), (Ax)_{0} = 0 but (A^T x)_{0} != 0", index + 1)
            }
            Violation::Submatrix { rows, inner } => format!("submatrix {rows}: {}", inner.describe()),
            Violation::NegativeMinor { alpha, det } => {
                format!("principal minor on {alpha} is {} < 0", format_rational(det))
            }
            Violation::NonpositiveMinor { alpha, det } => {
                format!("principal minor on {alpha} is {} <= 0", format_rational(det))
            }
            Violation::NegativeQuadraticOnOrthant { x } => format!("x = {x} >= 0 has x^T A x < 0"),
            Violation::NegativeQuadratic { x } => format!("x = {x} has x^T A x < 0"),
            Violation::NontrivialZeroSolution { x } => format!("x = {x} is a nonzero solution of LCP(0,A)"),
            Violation::PositiveOffDiagonal { row, col } => {
                format!("off-diagonal entry ({}, {}) is positive", row + 1, col + 1)
            }
            Violation::NotColumnSufficient { x, transposed } => {
                let b = if *transposed { "A^T" } else { "A" };
                format!("x = {x} has x_i ({b} x)_i <= 0 for all i, not all zero")
            }
        }
    }
}

fn minor(a: &RationalMatrix, alpha: &IndexSet) -> Option<Rational> {
    a.principal_submatrix(alpha).ok().map(|s| s.determinant())
}

/// Membership verdict for one class. A negative verdict always carries a
/// [`Violation`] that re-verifies exactly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassVerdict {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

impl ClassVerdict {
    pub fn member() -> Self {
        ClassVerdict {
            member: true,
            violation: None,
        }
    }

    pub fn violated(v: Violation) -> Self {
        ClassVerdict {
            member: false,
            violation: Some(v),
        }
    }

    pub fn witness(&self) -> Option<&RationalVector> {
        self.violation.as_ref().and_then(Violation::witness)
    }

    /// Support of the witness, in the coordinates of the full matrix.
    pub fn support(&self) -> Option<IndexSet> {
        fn lift(v: &Violation) -> Option<IndexSet> {
            match v {
                Violation::Submatrix { rows, inner } => {
                    let inner = lift(inner)?;
                    Some(IndexSet::new(inner.iter().map(|k| rows.indices()[k]).collect(), usize::MAX).ok()?)
                }
                other => other.witness().map(RationalVector::support),
            }
        }
        self.violation.as_ref().and_then(lift)
    }

    /// A positive verdict has no violation; a negative one re-verifies.
    pub fn verify(&self, a: &RationalMatrix) -> bool {
        match (&self.violation, self.member) {
            (None, true) => true,
            (Some(v), false) => v.verify(a),
            _ => false,
        }
    }
}
