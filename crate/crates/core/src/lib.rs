//! Exact-arithmetic toolkit for K3 surfaces carrying an automorphism of order 50.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`cyclotomic`] tracks Galois-closed eigenvalue lists on `H^2` and turns
//!   them into traces, Lefschetz numbers and characteristic polynomials.
//! * [`algebra`] provides finite fields with a chosen root of unity, sparse
//!   multivariate polynomials and coordinate substitution maps.
//! * [`geometry`] works with rational points of weighted projective spaces:
//!   enumeration, fixed loci, orbits and singular points.
//! * [`verifier`] cross-checks the cohomological predictions against the
//!   geometry and emits structured check reports.
//! * [`cli`] is the command-line front end.

pub mod algebra;
pub mod arith;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod geometry;
pub mod verifier;

pub use error::{Error, Result};
