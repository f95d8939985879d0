//! Exact linear algebra over polynomial rings `R[X_1, …, X_N]` with a Bézout
//! coefficient domain `R`: syzygy generators, inhomogeneous systems, ideal
//! and radical membership with certificates, and parametric families of
//! syzygy generators described by quantifier-free gcd formulas.

pub mod bounds;
pub mod domain;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod qf;
pub mod syzygy;

pub use error::{Error, Result};
