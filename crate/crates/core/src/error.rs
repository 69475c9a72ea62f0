use thiserror::Error;

use crate::numerics::IndexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have at least one row")]
    EmptyMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("principal pivot on {alpha} is not legitimate (singular pivot block)")]
    IllegitimatePivot { alpha: IndexSet },
    #[error("numerical breakdown: non-positive pivot {pivot} in Cholesky factorization")]
    NumericalBreakdown { pivot: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("dimension {n} exceeds the enumeration limit {max}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no strictly feasible starting point: {0}")]
    NotStrictlyFeasible(String),
    #[error("unknown {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
