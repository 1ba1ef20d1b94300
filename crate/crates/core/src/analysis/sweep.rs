//! Large-range sweeps of Δ(x) and Δ(x)/x^{1/4}.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{count_floor_identity, fill_segment, LatticeRecord, MAX_X};
use crate::error::{Error, Result};

/// Chunk width in samples. Fixed so output never depends on worker count.
pub const CHUNK_SAMPLES: usize = 4096;
/// Widest integer window a chunk will sieve locally; wider gaps fall back to
/// evaluating each sample by the floor identity.
const MAX_WINDOW: u64 = 1 << 20;
/// Largest number of samples one sweep may hold in memory.
pub const MAX_SAMPLES: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampling {
    Integers,
    HalfIntegers,
    Grid(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub x_start: f64,
    pub x_end: f64,
    pub sampling: Sampling,
    pub workers: usize,
}

impl SweepConfig {
    pub fn integers(x_start: f64, x_end: f64, workers: usize) -> Self {
        SweepConfig { x_start, x_end, sampling: Sampling::Integers, workers }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_start > 0.0) || !self.x_start.is_finite() {
            return Err(Error::domain(format!("x_start must be positive, got {}", self.x_start)));
        }
        if !(self.x_end >= self.x_start) || !self.x_end.is_finite() {
            return Err(Error::domain(format!(
                "x_end = {} must not precede x_start = {}",
                self.x_end, self.x_start
            )));
        }
        if self.x_end > MAX_X {
            return Err(Error::domain(format!("x_end exceeds the cap {MAX_X:e}")));
        }
        if let Sampling::Grid(step) = self.sampling {
            if !(step > 0.0) || !step.is_finite() {
                return Err(Error::domain(format!("grid step must be positive, got {step}")));
            }
        }
        if self.workers == 0 {
            return Err(Error::domain("workers must be at least 1"));
        }
        let n = self.sample_count();
        if n > MAX_SAMPLES {
            return Err(Error::ResourceLimit(format!("{n} samples exceed the cap {MAX_SAMPLES}")));
        }
        Ok(())
    }

    fn sample_count(&self) -> u64 {
        match self.sampling {
            Sampling::Integers => {
                let (a, b) = (self.x_start.ceil(), self.x_end.floor());
                if b >= a {
                    (b - a) as u64 + 1
                } else {
                    0
                }
            }
            Sampling::HalfIntegers => {
                let (a, b) = ((self.x_start - 0.5).ceil(), (self.x_end - 0.5).floor());
                if b >= a {
                    (b - a) as u64 + 1
                } else {
                    0
                }
            }
            Sampling::Grid(step) => ((self.x_end - self.x_start) / step).floor() as u64 + 1,
        }
    }

    fn samples(&self) -> Vec<f64> {
        let n = self.sample_count();
        match self.sampling {
            Sampling::Integers => {
                let a = self.x_start.ceil();
                (0..n).map(|i| a + i as f64).collect()
            }
            Sampling::HalfIntegers => {
                let a = (self.x_start - 0.5).ceil();
                (0..n).map(|i| a + i as f64 + 0.5).collect()
            }
            Sampling::Grid(step) => (0..n).map(|i| self.x_start + i as f64 * step).collect(),
        }
    }
}

/// Maximum of |Δ(x)|/x^{1/4} over the samples in `[2^k, 2^{k+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DyadicBlock {
    pub k: u32,
    pub samples: u64,
    pub max_abs_normalized: f64,
    pub argmax_x: f64,
    /// Maximum over all samples up to the end of this block.
    pub running_max: f64,
    /// Same statistic for the left limits `Δ(n⁻) = count(n−1) − πn`
    /// (integer sampling only).
    pub max_abs_prejump: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub records: Vec<LatticeRecord>,
    pub max_abs_normalized: f64,
    pub argmax_x: f64,
    pub mean_count_over_x: f64,
    /// `|Δ(n⁻)|/n^{1/4}` maximum and its location, for integer sampling.
    pub max_abs_prejump: Option<(f64, f64)>,
    pub blocks: Vec<DyadicBlock>,
}

struct ChunkOut {
    records: Vec<LatticeRecord>,
    prejump: Vec<Option<f64>>,
}

fn eval_chunk(xs: &[f64], want_prejump: bool) -> ChunkOut {
    let floors: Vec<u64> = xs.iter().map(|x| x.floor() as u64).collect();
    let (first, last) = (floors[0], *floors.last().expect("chunk not empty"));
    let mut records = Vec::with_capacity(xs.len());
    let mut prejump = Vec::with_capacity(xs.len());
    let pre = |n: u64, count_before: u64| {
        let nf = n as f64;
        (count_before as f64 - PI * nf) / nf.powf(0.25)
    };

    if last - first <= MAX_WINDOW {
        // r₂ over [first, last], then walk the prefix.
        let mut r2 = vec![0u32; (last - first + 1) as usize];
        fill_segment(first, &mut r2);
        let mut count = count_floor_identity(first);
        let mut at = first;
        for (&x, &n) in xs.iter().zip(&floors) {
            while at < n {
                at += 1;
                count += r2[(at - first) as usize] as u64;
            }
            records.push(LatticeRecord::new(x, count));
            prejump.push((want_prejump && n >= 1).then(|| pre(n, count - r2[(n - first) as usize] as u64)));
        }
        // The walk must land on the independent evaluation at the far end.
        debug_assert_eq!(count, count_floor_identity(last));
    } else {
        for (&x, &n) in xs.iter().zip(&floors) {
            let count = count_floor_identity(n);
            records.push(LatticeRecord::new(x, count));
            prejump.push((want_prejump && n >= 1).then(|| pre(n, count_floor_identity(n - 1))));
        }
    }
    ChunkOut { records, prejump }
}

/// Lattice records at every sample of `config`, plus summary statistics.
///
/// Samples are split into fixed chunks of [`CHUNK_SAMPLES`]; each chunk is
/// anchored by the floor identity and advanced with a locally sieved
/// window of r₂ values, so memory does not grow with `x_end`.
pub fn sweep_delta(config: &SweepConfig) -> Result<SweepSummary> {
    config.validate()?;
    let xs = config.samples();
    if xs.is_empty() {
        return Err(Error::domain("sweep range contains no samples"));
    }
    let want_prejump = config.sampling == Sampling::Integers;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::ResourceLimit(format!("cannot start worker pool: {e}")))?;
    let chunks: Vec<ChunkOut> =
        pool.install(|| xs.par_chunks(CHUNK_SAMPLES).map(|c| eval_chunk(c, want_prejump)).collect());

    let mut records = Vec::with_capacity(xs.len());
    let mut prejump = Vec::with_capacity(xs.len());
    for c in chunks {
        records.extend(c.records);
        prejump.extend(c.prejump);
    }
    Ok(summarize(records, &prejump))
}

fn summarize(records: Vec<LatticeRecord>, prejump: &[Option<f64>]) -> SweepSummary {
    let mut max_abs = f64::NEG_INFINITY;
    let mut argmax = records[0].x;
    let mut ratio_sum = 0.0;
    let mut pre_best: Option<(f64, f64)> = None;
    let mut blocks: Vec<DyadicBlock> = Vec::new();
    let mut running = f64::NEG_INFINITY;

    for (r, p) in records.iter().zip(prejump) {
        let v = r.normalized.map_or(0.0, f64::abs);
        if v > max_abs {
            max_abs = v;
            argmax = r.x;
        }
        running = running.max(v);
        ratio_sum += r.count as f64 / r.x;
        if let Some(p) = p.map(f64::abs) {
            if pre_best.is_none_or(|(b, _)| p > b) {
                pre_best = Some((p, r.x));
            }
        }

        let k = r.x.log2().floor().max(0.0) as u32;
        if blocks.last().is_none_or(|b| b.k != k) {
            blocks.push(DyadicBlock {
                k,
                samples: 0,
                max_abs_normalized: f64::NEG_INFINITY,
                argmax_x: r.x,
                running_max: running,
                max_abs_prejump: None,
            });
        }
        let b = blocks.last_mut().expect("pushed above");
        b.samples += 1;
        if v > b.max_abs_normalized {
            b.max_abs_normalized = v;
            b.argmax_x = r.x;
        }
        b.running_max = running;
        if let Some(p) = p.map(f64::abs) {
            b.max_abs_prejump = Some(b.max_abs_prejump.map_or(p, |q: f64| q.max(p)));
        }
    }

    let n = records.len() as f64;
    SweepSummary {
        records,
        max_abs_normalized: max_abs,
        argmax_x: argmax,
        mean_count_over_x: ratio_sum / n,
        max_abs_prejump: pre_best,
        blocks,
    }
}
