//! One consolidated report pairing each claim under test with a measured
//! desk-scale statistic.

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use super::probes::{cosine_sum_probe, d_partial_sup, d_sup_key, sup_of, uniform_grid};
use super::sweep::{sweep_delta, DyadicBlock, SweepConfig};
use crate::arith::{count_floor_identity, r2_sieve};
use crate::error::{Error, Result};
use crate::golden::GoldenStore;
use crate::series::{
    cos_power_partials, f_eps_limit, fresnel_closed_form, sqrt_closed_form, voronoi_partial,
};
use crate::special::{fresnel, BesselPolicy};

pub const SWEEP_GOLDEN: &str = "sweep";
pub const D_SUP_GOLDEN: &str = "d_partial_sup";
/// Relative tolerance when comparing sweep statistics to their goldens.
pub const SWEEP_GOLDEN_RTOL: f64 = 1e-12;
/// Relative tolerance for the `d_partial` sup goldens.
pub const D_SUP_GOLDEN_TOL: f64 = 1e-8;

/// Upper end of the sweep behind the running-max table.
pub const RUNNING_MAX_X: f64 = 1e6;
pub const D_SUP_XS: [f64; 3] = [1.0, 2.0, 10.5];
pub const D_SUP_DELTAS: [f64; 2] = [0.125, 0.2];
pub const D_SUP_M: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    Tension,
    OutOfReach,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub paper_anchor: String,
    pub statistic: String,
    pub value: f64,
    pub verdict: Verdict,
}

/// One dyadic block of the `|Δ(x)|/x^{1/4}` sweep with its frozen value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunningMaxRow {
    pub k: u32,
    pub block_max: f64,
    pub argmax_x: f64,
    pub running_max: f64,
    pub prejump_max: Option<f64>,
    pub golden_running_max: f64,
    pub matches_golden: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimsReport {
    pub claims: Vec<Claim>,
    pub running_max: Vec<RunningMaxRow>,
}

fn claim(id: &str, anchor: &str, statistic: &str, value: f64, verdict: Verdict) -> Claim {
    Claim { id: id.into(), paper_anchor: anchor.into(), statistic: statistic.into(), value, verdict }
}

fn within(v: f64, tol: f64) -> Verdict {
    if v.is_finite() && v <= tol {
        Verdict::Consistent
    } else {
        Verdict::Tension
    }
}

fn close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * b.abs().max(f64::MIN_POSITIVE)
}

/// Golden key for block `k` of the running-max table.
pub fn running_max_key(k: u32) -> String {
    format!("block_{k:02}_running_max")
}

/// Compares the dyadic sweep blocks against the frozen table.
pub fn running_max_table(blocks: &[DyadicBlock], store: &GoldenStore) -> Result<Vec<RunningMaxRow>> {
    let golden = store.load(SWEEP_GOLDEN)?;
    blocks
        .iter()
        .map(|b| {
            let g = golden.get(&running_max_key(b.k))?;
            Ok(RunningMaxRow {
                k: b.k,
                block_max: b.max_abs_normalized,
                argmax_x: b.argmax_x,
                running_max: b.running_max,
                prejump_max: b.max_abs_prejump,
                golden_running_max: g,
                matches_golden: close(b.running_max, g, SWEEP_GOLDEN_RTOL),
            })
        })
        .collect()
}

/// Builds the claims report. `workers` only affects speed.
pub fn claims_report(store: &GoldenStore, workers: usize) -> Result<ClaimsReport> {
    // Fail fast on an incomplete build.
    let d_golden = store.load(D_SUP_GOLDEN)?;
    store.load(SWEEP_GOLDEN)?;

    let mut claims = Vec::new();

    let sweep = sweep_delta(&SweepConfig::integers(1.0, RUNNING_MAX_X, workers))?;
    let running_max = running_max_table(&sweep.blocks, store)?;
    if running_max.iter().any(|r| !r.matches_golden) {
        return Err(Error::Golden("running-max table differs from its golden".into()));
    }

    let n = RUNNING_MAX_X as u64;
    let gauss = ((count_floor_identity(n) as f64 / n as f64) - PI).abs() * (n as f64).sqrt();
    claims.push(claim(
        "gauss_mean_value",
        "mean value of r2: sum_{n<=x} r2(n) / x -> pi",
        "sqrt(x)*|count(x)/x - pi| at x = 1e6 (envelope 8)",
        gauss,
        within(gauss, 8.0),
    ));

    let table = r2_sieve(100_000)?;
    let vor = voronoi_partial(10.5, 100_000, &table, &BesselPolicy::default())?;
    let vres = (vor.value - count_floor_identity(10) as f64).abs();
    claims.push(claim(
        "voronoi_identity",
        "Hardy-Voronoi Bessel series equals the lattice count off the integers",
        "|voronoi_partial(10.5, 1e5) - count(10.5)| (tolerance 1e-2)",
        vres,
        within(vres, 1e-2),
    ));

    let (c, s) = fresnel(1e4)?;
    let fd = (c - 0.5).abs().max((s - 0.5).abs());
    claims.push(claim(
        "fresnel_limit",
        "Fresnel integrals tend to 1/2",
        "max(|F_C(1e4) - 1/2|, |F_S(1e4) - 1/2|) (tolerance 1e-4)",
        fd,
        within(fd, 1e-4),
    ));

    let mut worst: f64 = 0.0;
    for a in [1.0, 2.0, 7.3] {
        for m in [100, 10_000, 1_000_000] {
            worst = worst.max(fresnel_closed_form(a, m)?.residual.abs());
        }
    }
    claims.push(claim(
        "fresnel_closed_form",
        "cosine sum with n^(-3/4) weight written as a Fresnel closed form",
        "max |residual| over a in {1, 2, 7.3}, M in {1e2, 1e4, 1e6} (equality tolerance 1e-6)",
        worst,
        within(worst, 1e-6),
    ));

    let probe = sup_of(&cosine_sum_probe(&uniform_grid(1.0, 100.0, 1.0), 1_000_000)?);
    claims.push(claim(
        "cosine_sum_bounded_by_sqrt2",
        "the n^(-3/4) cosine sum is absolutely bounded by sqrt(2)",
        "sup |sum_{n<=M} cos(2 pi sqrt(na) + pi/4)/n^(3/4)| over integer a in [1, 100], dyadic M <= 1e6",
        probe.value,
        within(probe.value, SQRT_2),
    ));

    let mut f_sup: f64 = 0.0;
    for eps in [0.25, 0.5, 1.0] {
        for x in uniform_grid(1.0, 100.0, 1.0) {
            f_sup = f_sup.max(f_eps_limit(eps, x)?.abs());
        }
    }
    claims.push(claim(
        "f_eps_bounded",
        "the exponential-integral limit function is bounded for x >= 1",
        "max |f(eps, x)| over eps in {1/4, 1/2, 1}, integer x in [1, 100]",
        f_sup,
        within(f_sup, f64::MAX),
    ));

    let partial = *cos_power_partials(4.0, 1_000_000, 1.0)?.last().expect("non-empty");
    let limit_gap = (partial - f_eps_limit(1.0, 4.0)?).abs();
    claims.push(claim(
        "f_eps_is_the_limit",
        "the eps-weighted cosine sum converges to the limit function",
        "|sum_{n<=1e6} cos(4 pi sqrt(n) + pi/4)/n - f(1, 4)| (tolerance 1e-2)",
        limit_gap,
        within(limit_gap, 1e-2),
    ));

    let sq = cos_power_partials(2.0, 1_000_000, 0.5)?;
    let tail = &sq[99_999..];
    let lo = tail.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    claims.push(claim(
        "sqrt_sum_not_convergent",
        "the n^(-1/2) cosine sum is bounded but not convergent",
        "max - min of the partial sums at x = 2 over 1e5 <= M <= 1e6 (no Cauchy convergence if >= 0.1)",
        hi - lo,
        if hi - lo >= 0.1 { Verdict::Consistent } else { Verdict::Tension },
    ));

    let x2 = sqrt_closed_form(2.0, 10_000)?;
    let x2_gap = (x2.params["x2_rhs"] - x2.rhs_closed).abs();
    claims.push(claim(
        "sqrt_closed_form_x2",
        "the x = 2 specialization of the n^(-1/2) closed form",
        "|specialized rhs - general rhs| at M = 1e4 (tolerance 1e-8)",
        x2_gap,
        within(x2_gap, 1e-8),
    ));
    claims.push(claim(
        "sqrt_closed_form",
        "the n^(-1/2) cosine sum written in closed form",
        "|residual| at x = 2, M = 1e4 (equality tolerance 1e-6)",
        x2.residual.abs(),
        within(x2.residual.abs(), 1e-6),
    ));

    // Uniform boundedness is read off the last decade: no new record
    // between M = 1e5 and 1e6 is consistent with it, a new one is tension.
    let rows = d_partial_sup(&D_SUP_XS, &D_SUP_DELTAS, D_SUP_M)?;
    let mut d_sup: f64 = 0.0;
    let mut late_record = false;
    for r in &rows {
        let g = d_golden.get(&d_sup_key(r.x, r.delta))?;
        if !close(r.sup, g, D_SUP_GOLDEN_TOL) {
            return Err(Error::Golden(format!(
                "d_partial sup at {} is {} but the golden is {g}",
                d_sup_key(r.x, r.delta),
                r.sup
            )));
        }
        d_sup = d_sup.max(r.sup);
        late_record |= r.argmax_m > D_SUP_M / 10;
    }
    claims.push(claim(
        "d_partial_uniformly_bounded",
        "the n^(-3/4+delta) cosine sums are uniformly bounded in M",
        "sup_{M<=1e6} |d_partial| over x in {1, 2, 10.5}, delta in {1/8, 1/5}; tension if a record falls in M > 1e5",
        d_sup,
        if late_record { Verdict::Tension } else { Verdict::Consistent },
    ));

    let last = running_max.last().expect("sweep is non-empty");
    claims.push(claim(
        "delta_little_o",
        "Delta(x) = o(x^(1/4) f(x))",
        "running max of |Delta(x)|/x^(1/4) over x <= 1e6 (see running_max table)",
        last.running_max,
        Verdict::OutOfReach,
    ));
    claims.push(claim(
        "hardy_omega",
        "Hardy: limsup |Delta(x)|/x^(1/4) = infinity",
        "running max of |Delta(x)|/x^(1/4) over x <= 1e6 (see running_max table)",
        last.running_max,
        Verdict::OutOfReach,
    ));

    Ok(ClaimsReport { claims, running_max })
}
