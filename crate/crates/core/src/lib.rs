//! Numerical laboratory for the Gauss circle problem.
//!
//! * [`arith`]: exact r₂(n), lattice counts and Δ(x).
//! * [`special`]: J₁, Fresnel integrals and the generalized exponential integral.
//! * [`series`]: truncated Voronoi-type series and their closed-form approximants.
//! * [`analysis`]: sweeps, convergence ladders and the claims report.
//! * [`cli`]: the `circlelab` command line and its file formats.

// Range checks are written `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod arith;
pub mod cli;
pub mod error;
pub mod golden;
pub mod quad;
pub mod series;
pub mod special;

pub use error::{Error, Result};
