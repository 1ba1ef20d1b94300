//! Convergence ladders for the truncated series.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::arith::{count_floor_identity, r2_sieve, R2Table};
use crate::error::{finite, Error, Result};
use crate::series::{check_positive, cos_power_partials, m_n_s, voronoi_running, CompensatedSum};
use crate::special::BesselPolicy;

/// Default Cesàro window length.
pub const DEFAULT_WINDOW: u64 = 100;
/// Largest truncation a ladder may request.
pub const MAX_LADDER_TERMS: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "target", rename_all = "snake_case")]
pub enum ConvergenceTarget {
    /// Hardy–Voronoi series at a non-integer `x`; the reference is the
    /// exact lattice count.
    Voronoi {
        x: f64,
    },
    SPartial {
        x: f64,
    },
    DPartial {
        x: f64,
        delta: f64,
    },
    /// Outer truncations of `P_s` (or `Q_s` when `sine`), inner sum fixed.
    PQ {
        a: f64,
        b: f64,
        s: f64,
        k_terms: u64,
        sine: bool,
    },
}

impl ConvergenceTarget {
    pub fn name(&self) -> &'static str {
        match self {
            ConvergenceTarget::Voronoi { .. } => "voronoi",
            ConvergenceTarget::SPartial { .. } => "s_partial",
            ConvergenceTarget::DPartial { .. } => "d_partial",
            ConvergenceTarget::PQ { sine: false, .. } => "p_s",
            ConvergenceTarget::PQ { sine: true, .. } => "q_s",
        }
    }

    fn reference(&self) -> Option<f64> {
        match *self {
            ConvergenceTarget::Voronoi { x } => Some(count_floor_identity(x.floor() as u64) as f64),
            _ => None,
        }
    }
}

/// One ladder step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub terms: u64,
    pub value: f64,
    /// Mean of the partial values at truncations `terms − w + 1 ..= terms`
    /// with `w = min(window, terms)`.
    pub window_mean: f64,
    /// `value − reference`, when the target has one.
    pub residual: Option<f64>,
    /// `window_mean − reference`, when the target has one.
    pub windowed_residual: Option<f64>,
    /// Change of the window mean since the previous ladder step.
    pub windowed_increment: Option<f64>,
    /// `max |partial|` over all truncations up to `terms`.
    pub sup_so_far: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub target: ConvergenceTarget,
    pub window: u64,
    pub reference: Option<f64>,
    pub rows: Vec<ConvergenceRow>,
}

fn running_values(target: &ConvergenceTarget, max_terms: u64, r2: Option<&R2Table>) -> Result<Vec<f64>> {
    let owned;
    let table = |r2: Option<&R2Table>| -> Result<R2Table> {
        match r2 {
            Some(t) if t.limit() >= max_terms => Ok(t.clone()),
            _ => r2_sieve(max_terms),
        }
    };
    match *target {
        ConvergenceTarget::Voronoi { x } => {
            owned = table(r2)?;
            voronoi_running(x, max_terms, &owned, &BesselPolicy::default())
        }
        ConvergenceTarget::SPartial { x } => {
            check_positive(x, "x")?;
            owned = table(r2)?;
            let mut acc = CompensatedSum::default();
            Ok(owned.values()[1..=max_terms as usize]
                .iter()
                .enumerate()
                .map(|(i, &r)| {
                    if r != 0 {
                        let n = (i + 1) as f64;
                        let phase = 2.0 * PI * (n * x).sqrt() + FRAC_PI_4;
                        acc.add(r as f64 * phase.cos() * n.powf(-0.75));
                    }
                    acc.value()
                })
                .collect())
        }
        ConvergenceTarget::DPartial { x, delta } => {
            if !(delta > 0.0 && delta < 0.25) {
                return Err(Error::domain(format!("delta must lie in (0, 1/4), got {delta}")));
            }
            cos_power_partials(x, max_terms, 0.75 - delta)
        }
        ConvergenceTarget::PQ { a, b, s, k_terms, sine } => {
            if !(s > 0.5) {
                return Err(Error::domain(format!("exponent s must exceed 0.5, got {s}")));
            }
            let mut acc = CompensatedSum::default();
            (1..=max_terms)
                .map(|n| {
                    let nf = n as f64;
                    let (m, nn) = m_n_s(a, b * nf.sqrt(), s, k_terms)?;
                    acc.add(nf.powf(-s) * if sine { nn } else { m });
                    Ok(acc.value())
                })
                .collect()
        }
    }
}

/// Evaluates `target` along a strictly increasing ladder of truncations.
///
/// `r2` is reused when it covers the largest rung; otherwise a table is
/// sieved. Only finiteness is checked; nothing here asserts convergence.
pub fn convergence_report(
    target: ConvergenceTarget,
    ladder: &[u64],
    window: u64,
    r2: Option<&R2Table>,
) -> Result<ConvergenceReport> {
    if ladder.is_empty() {
        return Err(Error::domain("ladder must not be empty"));
    }
    if ladder[0] == 0 || ladder.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("ladder must be strictly increasing positive integers"));
    }
    if window == 0 {
        return Err(Error::domain("window must be at least 1"));
    }
    let max_terms = *ladder.last().expect("not empty");
    if max_terms > MAX_LADDER_TERMS {
        return Err(Error::ResourceLimit(format!(
            "ladder top {max_terms} exceeds the cap {MAX_LADDER_TERMS}"
        )));
    }
    let values = running_values(&target, max_terms, r2)?;
    let reference = target.reference();

    let mut rows = Vec::with_capacity(ladder.len());
    let mut sup = 0.0f64;
    let mut scanned = 0usize;
    let mut prev_mean: Option<f64> = None;
    for &terms in ladder {
        let end = terms as usize;
        for v in &values[scanned..end] {
            sup = sup.max(v.abs());
        }
        scanned = end;
        let w = window.min(terms) as usize;
        let slice = &values[end - w..end];
        let window_mean = finite(slice.iter().sum::<f64>() / w as f64, "window mean")?;
        let value = finite(values[end - 1], target.name())?;
        rows.push(ConvergenceRow {
            terms,
            value,
            window_mean,
            residual: reference.map(|r| value - r),
            windowed_residual: reference.map(|r| window_mean - r),
            windowed_increment: prev_mean.map(|p| window_mean - p),
            sup_so_far: sup,
        });
        prev_mean = Some(window_mean);
    }
    Ok(ConvergenceReport { target, window, reference, rows })
}

/// `1, 2, 5, 10, 20, 50, …` up to and including `top` (appended if absent).
pub fn ladder_125(top: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut base = 1u64;
    'outer: loop {
        for m in [1, 2, 5] {
            let v = base * m;
            if v > top {
                break 'outer;
            }
            out.push(v);
        }
        base *= 10;
    }
    if out.last() != Some(&top) && top > 0 {
        out.push(top);
    }
    out
}
