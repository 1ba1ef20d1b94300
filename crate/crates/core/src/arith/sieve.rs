//! Batch evaluation of r₂ over `0..=limit`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::r2::chi4;
use crate::error::{Error, Result};

/// Memory and segmentation knobs for [`r2_sieve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveConfig {
    /// Largest table (in entries, 4 bytes each) the sieve may allocate.
    pub max_entries: u64,
    /// Limits at or above this use the segmented, parallel sieve.
    pub segment_threshold: u64,
    /// Segment width for the segmented sieve.
    pub segment_len: usize,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            // 1 GiB of u32 entries.
            max_entries: 1 << 28,
            segment_threshold: 1 << 22,
            segment_len: 1 << 16,
        }
    }
}

/// Sieved values `r₂(0), …, r₂(limit)`. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R2Table {
    values: Vec<u32>,
}

impl R2Table {
    /// Wraps precomputed values; `values[0]` must be 1.
    pub fn from_values(values: Vec<u32>) -> Result<Self> {
        match values.first() {
            Some(1) => Ok(R2Table { values }),
            _ => Err(Error::Format("r2 table must start with r2(0) = 1".into())),
        }
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `r₂(n)`, or `None` past the end of the table.
    pub fn get(&self, n: u64) -> Option<u32> {
        usize::try_from(n).ok().and_then(|i| self.values.get(i).copied())
    }

    /// `Σ_{0 ≤ k ≤ n} r₂(k)`; `n` is clamped to the table limit.
    pub fn prefix_count(&self, n: u64) -> u64 {
        let end = n.min(self.limit()) as usize;
        self.values[..=end].iter().map(|&v| v as u64).sum()
    }

    pub(crate) fn ensure_covers(&self, n: u64, who: &str) -> Result<()> {
        if self.limit() < n {
            return Err(Error::domain(format!(
                "{who}: r2 table limit {} is below the required {n}",
                self.limit()
            )));
        }
        Ok(())
    }
}

/// Sieves r₂ over `0..=limit` with the default configuration.
pub fn r2_sieve(limit: u64) -> Result<R2Table> {
    r2_sieve_with(limit, &SieveConfig::default())
}

/// Sieves r₂ over `0..=limit`.
///
/// Below `segment_threshold` every odd `d` adds `4·χ(d)` to its multiples.
/// Above it the range is split into independent segments, each of which
/// visits divisor pairs `(d, n/d)` with `d ≤ √n`; segments run in parallel
/// and the output does not depend on their number.
pub fn r2_sieve_with(limit: u64, config: &SieveConfig) -> Result<R2Table> {
    let entries = limit.checked_add(1).filter(|&e| e <= config.max_entries).ok_or_else(|| {
        Error::ResourceLimit(format!(
            "r2 table up to {limit} needs {} entries, cap is {}",
            limit.saturating_add(1),
            config.max_entries
        ))
    })?;
    let len = usize::try_from(entries)
        .map_err(|_| Error::ResourceLimit(format!("{entries} entries exceed the address space")))?;

    let values = if limit < config.segment_threshold {
        plain_sieve(len)
    } else {
        segmented_sieve(len, config.segment_len.max(1))
    };
    Ok(R2Table { values })
}

fn plain_sieve(len: usize) -> Vec<u32> {
    let mut acc = vec![0i32; len];
    for d in (1..len).step_by(2) {
        let w = if d & 3 == 1 { 4 } else { -4 };
        for m in (d..len).step_by(d) {
            acc[m] += w;
        }
    }
    acc[0] = 1;
    acc.into_iter().map(|v| v as u32).collect()
}

fn segmented_sieve(len: usize, segment_len: usize) -> Vec<u32> {
    let mut values = vec![0u32; len];
    values
        .par_chunks_mut(segment_len)
        .enumerate()
        .for_each(|(i, chunk)| fill_segment((i * segment_len) as u64, chunk));
    values
}

/// Fills `out[i] = r₂(lo + i)`.
pub(crate) fn fill_segment(lo: u64, out: &mut [u32]) {
    let hi = lo + out.len() as u64;
    let mut acc = vec![0i64; out.len()];
    let dmax = (hi - 1).isqrt();
    for d in 1..=dmax {
        let first = (d * d).max(lo.div_ceil(d) * d);
        let mut m = first;
        while m < hi {
            let q = m / d;
            let mut s = 0;
            if d & 1 == 1 {
                s += chi4(d);
            }
            if q != d && q & 1 == 1 {
                s += chi4(q);
            }
            acc[(m - lo) as usize] += s;
            m += d;
        }
    }
    for (o, a) in out.iter_mut().zip(acc) {
        *o = (4 * a) as u32;
    }
    if lo == 0 {
        out[0] = 1;
    }
}
