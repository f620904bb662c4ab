//! Sard-optimal quadrature formulas on `[0, 1]` in the Sobolev space
//! `L2^(m)(0,1)` with shifted boundary nodes.
//!
//! The crate is `no_std` (it needs `alloc`). Exact combinatorics live in
//! [`exact`]; high-precision arithmetic in [`real`]. The closed-form
//! pipeline runs [`roots::unit_disk_roots`] → [`solver`] systems →
//! coefficient assembly, and [`norm`] evaluates the error functional.
//! [`oracle`] solves the full optimality system by brute force for
//! cross-checking.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod linalg;
pub mod norm;
pub mod oracle;
pub mod precision;
pub mod problem;
pub mod real;
pub mod roots;
pub mod solver;

pub use error::{Error, Result};
pub use exact::{EFPolynomial, Rational};
pub use norm::NormReport;
pub use oracle::OracleSolution;
pub use precision::PrecisionConfig;
pub use problem::{NodeLayout, QuadratureSpec};
pub use real::Real;
pub use roots::RootSet;
pub use solver::OptimalFormula;
