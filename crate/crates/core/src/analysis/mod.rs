//! Experiment harness: sweeps of Δ(x)/x^{1/4}, convergence ladders,
//! boundedness probes and the claims report.

mod claims;
mod convergence;
mod probes;
mod sweep;

pub use claims::{
    claims_report, running_max_key, running_max_table, Claim, ClaimsReport, RunningMaxRow, Verdict,
    D_SUP_DELTAS, D_SUP_GOLDEN, D_SUP_M, D_SUP_XS, RUNNING_MAX_X, SWEEP_GOLDEN,
};
pub use convergence::{
    convergence_report, ladder_125, ConvergenceReport, ConvergenceRow, ConvergenceTarget, DEFAULT_WINDOW,
    MAX_LADDER_TERMS,
};
pub use probes::{
    cosine_sum_probe, d_partial_sup, d_sup_key, dyadic_ladder, sup_of, uniform_grid, DSupRow, SupPoint,
    COSINE_SUM_ENVELOPE,
};
pub use sweep::{sweep_delta, DyadicBlock, Sampling, SweepConfig, SweepSummary, CHUNK_SAMPLES, MAX_SAMPLES};
