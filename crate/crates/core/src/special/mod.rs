//! Double-precision special-function kernels.

mod bessel;
mod expint;
mod fresnel;

pub use bessel::{
    bessel_j1, bessel_j1_asymptotic, bessel_j1_series, c1, AsymptoticEval, BesselMethod, BesselPolicy,
    CoefficientCache, ASYMPTOTIC_MAX_TERMS, C1_MAX_ORDER,
};
pub use expint::expint;
pub use fresnel::fresnel;
