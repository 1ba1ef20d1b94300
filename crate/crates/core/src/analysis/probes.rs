//! Boundedness probes over parameter grids.

use std::f64::consts::{FRAC_PI_4, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{check_positive, CompensatedSum};

/// Envelope the cosine sum is probed against.
pub const COSINE_SUM_ENVELOPE: f64 = 3.0;

/// Dyadic truncations `1, 2, 4, …` not exceeding `m_max`.
pub fn dyadic_ladder(m_max: u64) -> Vec<u64> {
    std::iter::successors(Some(1u64), |m| m.checked_mul(2)).take_while(|&m| m <= m_max).collect()
}

/// `a = 1, 1 + step, …` up to `hi` inclusive.
pub fn uniform_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    (0..=n).map(|i| lo + i as f64 * step).collect()
}

/// Largest `|Σ_{n ≤ M} cos(2π√(na) + π/4)/n^{exponent}|` seen for one `a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupPoint {
    pub a: f64,
    pub m: u64,
    pub value: f64,
}

fn sup_for(a: f64, exponent: f64, checkpoints: &[u64]) -> SupPoint {
    let mut acc = CompensatedSum::default();
    let mut best = SupPoint { a, m: 0, value: 0.0 };
    let mut next = checkpoints.iter().peekable();
    let top = *checkpoints.last().expect("non-empty");
    for n in 1..=top {
        let nf = n as f64;
        acc.add((2.0 * PI * (nf * a).sqrt() + FRAC_PI_4).cos() * nf.powf(-exponent));
        if next.peek() == Some(&&n) {
            next.next();
            let v = acc.value().abs();
            if v > best.value {
                best = SupPoint { a, m: n, value: v };
            }
        }
    }
    best
}

fn sup_grid(grid: &[f64], exponent: f64, checkpoints: &[u64]) -> Result<Vec<SupPoint>> {
    if grid.is_empty() || checkpoints.is_empty() {
        return Err(Error::domain("probe grid must not be empty"));
    }
    for &a in grid {
        check_positive(a, "a")?;
    }
    Ok(grid.par_iter().map(|&a| sup_for(a, exponent, checkpoints)).collect())
}

/// Per-`a` maxima of the `n^{−3/4}` cosine sum at dyadic truncations up to
/// `m_max`.
pub fn cosine_sum_probe(grid: &[f64], m_max: u64) -> Result<Vec<SupPoint>> {
    sup_grid(grid, 0.75, &dyadic_ladder(m_max))
}

/// Overall maximum of a probe table.
pub fn sup_of(points: &[SupPoint]) -> SupPoint {
    *points.iter().max_by(|p, q| p.value.total_cmp(&q.value)).expect("probe tables are non-empty")
}

/// `sup_{M ≤ m_max} |d_partial(x, M, δ)|` over every truncation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DSupRow {
    pub x: f64,
    pub delta: f64,
    pub m_max: u64,
    pub sup: f64,
    pub argmax_m: u64,
}

pub fn d_partial_sup(xs: &[f64], deltas: &[f64], m_max: u64) -> Result<Vec<DSupRow>> {
    for &d in deltas {
        if !(d > 0.0 && d < 0.25) {
            return Err(Error::domain(format!("delta must lie in (0, 1/4), got {d}")));
        }
    }
    if m_max == 0 {
        return Err(Error::domain("m_max must be at least 1"));
    }
    let all: Vec<u64> = (1..=m_max).collect();
    let mut rows = Vec::new();
    for &x in xs {
        for &delta in deltas {
            let p = sup_grid(&[x], 0.75 - delta, &all)?[0];
            rows.push(DSupRow { x, delta, m_max, sup: p.value, argmax_m: p.m });
        }
    }
    Ok(rows)
}

/// Golden key for a `d_partial` sup entry.
pub fn d_sup_key(x: f64, delta: f64) -> String {
    format!("x={x},delta={delta}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::d_partial;

    #[test]
    fn ladder_and_grid() {
        assert_eq!(dyadic_ladder(10), vec![1, 2, 4, 8]);
        assert_eq!(uniform_grid(1.0, 2.0, 0.5), vec![1.0, 1.5, 2.0]);
    }

    #[test]
    fn sup_matches_direct_partials() {
        let rows = d_partial_sup(&[2.0], &[0.125], 300).unwrap();
        let direct = (1..=300)
            .map(|m| (m, d_partial(2.0, m, 0.125).unwrap().value.abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        assert_eq!(rows[0].argmax_m, direct.0);
        assert!((rows[0].sup - direct.1).abs() < 1e-12);
    }

    #[test]
    fn first_term_is_a_lower_bound() {
        let p = cosine_sum_probe(&[2.0], 1).unwrap()[0];
        let first = (2.0 * PI * 2f64.sqrt() + FRAC_PI_4).cos().abs();
        assert_eq!((p.m, p.value), (1, first));
    }
}
