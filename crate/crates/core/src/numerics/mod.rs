//! Exact rational scalars, vectors and square matrices, plus the small
//! floating-point kernel used by the interior point method.

mod float;
mod index_set;
mod matrix;
mod rational;
mod vector;

pub use float::{dot, dot2, norm2, spd_solve, FloatMatrix};
pub use index_set::IndexSet;
pub use matrix::RationalMatrix;
pub use rational::{format_rational, parse_rational, rat, ratio, to_f64, Rational};
pub use vector::RationalVector;
