//! On-disk cache of sieved r₂ tables, keyed by limit.
//!
//! Layout: the 8-byte magic, the limit as little-endian `u64`, then
//! `limit + 1` little-endian `u32` values. A cached table is reused only
//! when it covers the requested limit; anything else is rebuilt.

use std::fs;
use std::path::{Path, PathBuf};

use crate::arith::{r2_sieve, R2Table};
use crate::error::Result;

pub const CACHE_DIR_ENV: &str = "CIRCLELAB_CACHE_DIR";
const MAGIC: &[u8; 8] = b"CLR2TAB1";
const FILE: &str = "r2table.bin";

fn decode(bytes: &[u8]) -> Option<R2Table> {
    let body = bytes.strip_prefix(MAGIC)?;
    let (limit, values) = body.split_at_checked(8)?;
    let limit = u64::from_le_bytes(limit.try_into().ok()?);
    if values.len() as u64 != (limit + 1) * 4 {
        return None;
    }
    let values = values.chunks_exact(4).map(|c| u32::from_le_bytes(c.try_into().unwrap())).collect();
    R2Table::from_values(values).ok()
}

fn encode(table: &R2Table) -> Vec<u8> {
    let mut out = Vec::with_capacity(16 + table.values().len() * 4);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&table.limit().to_le_bytes());
    for v in table.values() {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

/// Loads a cached table covering `limit` from `dir`, or sieves one and
/// stores it there.
pub fn load_or_sieve(dir: &Path, limit: u64) -> Result<R2Table> {
    let path = dir.join(FILE);
    if let Some(t) = fs::read(&path).ok().and_then(|b| decode(&b)) {
        if t.limit() >= limit {
            return Ok(t);
        }
    }
    let table = r2_sieve(limit)?;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, encode(&table))?;
    fs::rename(tmp, &path)?;
    Ok(table)
}

/// Sieves through the cache directory in `CIRCLELAB_CACHE_DIR` when set.
pub fn r2_table(limit: u64) -> Result<R2Table> {
    match std::env::var_os(CACHE_DIR_ENV) {
        Some(dir) if !dir.is_empty() => load_or_sieve(&PathBuf::from(dir), limit),
        _ => r2_sieve(limit),
    }
}
