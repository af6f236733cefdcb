//! Exact computation of (truncated) Gröbner bases for polynomial systems that
//! are homogeneous for a matrix of weights, over prime fields.
//!
//! A `k x n` integer matrix of rank `k` grades the polynomial ring in `n`
//! variables by assigning each monomial the degree vector `W·α`. Systems that
//! are homogeneous for such a grading can be solved degree slice by degree
//! slice with signature-labeled Macaulay matrices, which keeps the matrices
//! small and allows slices sharing a first-row degree to run in parallel.
//!
//! The crate provides:
//!
//! - [`algebra`]: GF(p) arithmetic, monomials, sparse polynomials, and a
//!   Buchberger oracle for cross-checking;
//! - [`grading`]: weight matrices, degrees, positivity and boundedness
//!   predicates, the induced graded reverse lexicographic order, and monomial
//!   enumeration;
//! - [`f5`]: the signature-based matrix engine with its elimination criteria,
//!   statistics, and parallel batching;
//! - [`steps`]: schedulers producing the list of degree slices to process,
//!   and the substitution embedding a weighted ring into a multigraded one;
//! - [`hilbert`]: Hilbert multiseries, multiplication-map ranks, regularity
//!   classification, and seeded random system generation;
//! - [`system`] and [`driver`]: the plain-text system file format and the
//!   high-level entry points behind the `mwgb` command-line tool.
//!
//! Each major capability has a runnable demonstration under `examples/`.

#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]

pub mod algebra;
pub mod driver;
pub mod error;
pub mod f5;
pub mod grading;
pub mod hilbert;
pub mod steps;
pub mod system;

pub use error::{Error, Result};
