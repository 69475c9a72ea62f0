//! Matrix classes and solvers for the linear complementarity problem
//!
//! ```text
//!     find z >= 0  with  w = q + Az >= 0  and  zᵀw = 0.
//! ```
//!
//! Class detectors work in exact rational arithmetic and return certificates:
//! every negative verdict carries a vector that violates the class
//! definition and can be re-checked independently. The solvers share the
//! [`solvers::LcpSolver`] trait and are looked up by name in a
//! [`solvers::SolverRegistry`].

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classes;
pub mod error;
pub mod lp;
pub mod numerics;
pub mod ppt;
pub mod solvers;

pub use error::{Error, Result};
pub use numerics::{IndexSet, Rational, RationalMatrix, RationalVector};
