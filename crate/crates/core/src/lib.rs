//! Exact computations on jet schemes of affine Poisson schemes.
//!
//! Polynomials have rational coefficients. Jet variables `x_(-j-1)` carry the
//! derivation `T`, and the mode operators `a_(k)` make the jet ring a vertex
//! Poisson algebra. On top of that sit rank matrices and their strata,
//! chirality tests for ideals, degree-truncated centers and chiral Poisson
//! cores, and a small Lie algebra testbed built around sl₂.
//!
//! The `jetpoisson` binary exposes the same computations as batch commands,
//! see [`cli`].

pub mod cli;
pub mod error;
pub mod groebner;
pub mod jet;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod stratify;
pub mod vpa;

pub use error::{Error, Result};
