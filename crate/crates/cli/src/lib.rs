//! Command-line front end: matrix documents, generators, the regression table
//! and command dispatch.

pub mod commands;
pub mod document;
pub mod generate;
pub mod reproduce;
