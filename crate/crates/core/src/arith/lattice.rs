//! The summatory function Σ_{n ≤ x} r₂(n) and the error term Δ(x).

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::sieve::{r2_sieve_with, R2Table, SieveConfig};
use crate::error::{Error, Result};

/// Largest admissible squared radius. Counts stay below 4·10¹².
pub const MAX_X: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SumMethod {
    /// Column scan of the closed disk, O(√x).
    Enumerate,
    /// Prefix sum of a sieved [`R2Table`].
    Sieve,
    /// `1 + 4 Σ_j (⌊x/(4j+1)⌋ − ⌊x/(4j+3)⌋)`, summed over quotient blocks.
    FloorIdentity,
}

impl FromStr for SumMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumerate" => Ok(SumMethod::Enumerate),
            "sieve" => Ok(SumMethod::Sieve),
            "floor_identity" | "floor-identity" | "floor" => Ok(SumMethod::FloorIdentity),
            other => Err(Error::domain(format!("unknown summation method `{other}`"))),
        }
    }
}

impl fmt::Display for SumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumMethod::Enumerate => "enumerate",
            SumMethod::Sieve => "sieve",
            SumMethod::FloorIdentity => "floor_identity",
        })
    }
}

/// One sample of the lattice count at squared radius `x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeRecord {
    pub x: f64,
    pub count: u64,
    pub pi_x: f64,
    pub delta: f64,
    /// `delta / x^{1/4}`; absent at `x = 0`.
    pub normalized: Option<f64>,
}

impl LatticeRecord {
    pub fn new(x: f64, count: u64) -> Self {
        let pi_x = PI * x;
        let delta = count as f64 - pi_x;
        let normalized = (x > 0.0).then(|| delta / x.powf(0.25));
        LatticeRecord { x, count, pi_x, delta, normalized }
    }
}

/// Validates `x` and returns `⌊x⌋`.
pub fn floor_arg(x: f64) -> Result<u64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(format!("x must be a finite nonnegative real, got {x}")));
    }
    if x > MAX_X {
        return Err(Error::domain(format!("x = {x} exceeds the cap {MAX_X:e}")));
    }
    Ok(x.floor() as u64)
}

/// Lattice points in the closed disk `a² + b² ≤ n`.
pub fn count_enumerate(n: u64) -> u64 {
    let r = n.isqrt();
    let mut count = 2 * r + 1; // column a = 0
    for a in 1..=r {
        count += 2 * (2 * (n - a * a).isqrt() + 1);
    }
    count
}

/// Σ_{m ≤ k} χ₄(m): 1 when k ≡ 1, 2 (mod 4), else 0.
#[inline]
fn chi4_prefix(k: u64) -> i64 {
    matches!(k & 3, 1 | 2) as i64
}

/// Floor identity evaluated over blocks of constant `⌊n/d⌋`, O(√n).
pub fn count_floor_identity(n: u64) -> u64 {
    let mut acc: i64 = 0;
    let mut d = 1;
    while d <= n {
        let q = n / d;
        let last = n / q;
        acc += q as i64 * (chi4_prefix(last) - chi4_prefix(d - 1));
        d = last + 1;
    }
    1 + 4 * acc as u64
}

/// The floor identity summed term by term, O(n). Kept as an independent
/// check on the blocked form.
pub fn count_floor_identity_direct(n: u64) -> u64 {
    let mut acc: u64 = 0;
    let mut d = 1;
    while d <= n {
        acc += n / d - n / (d + 2);
        d += 4;
    }
    1 + 4 * acc
}

/// Lattice count at `x` with the chosen method. The sieve method builds a
/// table up to `⌊x⌋` under `sieve`'s memory cap.
pub fn sum_r2_with(x: f64, method: SumMethod, sieve: &SieveConfig) -> Result<LatticeRecord> {
    let n = floor_arg(x)?;
    let count = match method {
        SumMethod::Enumerate => count_enumerate(n),
        SumMethod::FloorIdentity => count_floor_identity(n),
        SumMethod::Sieve => r2_sieve_with(n, sieve)?.prefix_count(n),
    };
    Ok(LatticeRecord::new(x, count))
}

pub fn sum_r2(x: f64, method: SumMethod) -> Result<LatticeRecord> {
    sum_r2_with(x, method, &SieveConfig::default())
}

/// Lattice count from an existing table.
pub fn sum_r2_from_table(x: f64, table: &R2Table) -> Result<LatticeRecord> {
    let n = floor_arg(x)?;
    table.ensure_covers(n, "sum_r2")?;
    Ok(LatticeRecord::new(x, table.prefix_count(n)))
}

/// `(Σ_{n ≤ x} r₂(n) − πx) / x^{1/4}`.
pub fn delta_normalized(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("delta_normalized needs x > 0, got {x}")));
    }
    let rec = sum_r2(x, SumMethod::FloorIdentity)?;
    Ok(rec.normalized.expect("x > 0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::r2::r2_enumerate;

    fn brute_count(n: u64) -> u64 {
        (0..=n).map(r2_enumerate).sum()
    }

    #[test]
    fn small_counts() {
        assert_eq!(sum_r2(0.0, SumMethod::Enumerate).unwrap().count, 1);
        assert_eq!(sum_r2(0.0, SumMethod::FloorIdentity).unwrap().count, 1);
        assert_eq!(sum_r2(0.0, SumMethod::Sieve).unwrap().count, 1);
        assert_eq!(sum_r2(0.0, SumMethod::Enumerate).unwrap().delta, 1.0);
        for m in [SumMethod::Enumerate, SumMethod::Sieve, SumMethod::FloorIdentity] {
            assert_eq!(sum_r2(2.0, m).unwrap().count, 9);
            assert_eq!(sum_r2(2.99, m).unwrap().count, 9);
        }
    }

    #[test]
    fn x_100_golden() {
        // 317 points in the disk of radius 10.
        let rec = sum_r2(100.0, SumMethod::Enumerate).unwrap();
        assert_eq!(rec.count, 317);
        assert_eq!(rec.delta, 317.0 - 100.0 * PI);
    }

    #[test]
    fn methods_match_brute_force() {
        for n in 0..600u64 {
            let b = brute_count(n);
            assert_eq!(count_enumerate(n), b, "enumerate {n}");
            assert_eq!(count_floor_identity(n), b, "floor {n}");
            assert_eq!(count_floor_identity_direct(n), b, "floor direct {n}");
        }
    }

    #[test]
    fn delta_normalized_examples() {
        assert_eq!(delta_normalized(1.0).unwrap(), 5.0 - PI);
        let v = delta_normalized(4.0).unwrap();
        assert!((v - (13.0 - 4.0 * PI) / 4f64.powf(0.25)).abs() < 1e-15);
        assert!(delta_normalized(0.0).is_err());
        assert!(delta_normalized(-1.0).is_err());
    }

    #[test]
    fn rejects_bad_x() {
        assert!(sum_r2(-0.5, SumMethod::Enumerate).is_err());
        assert!(sum_r2(f64::NAN, SumMethod::Enumerate).is_err());
        assert!(sum_r2(2e12, SumMethod::FloorIdentity).is_err());
    }

    #[test]
    fn cap_is_representable() {
        let rec = sum_r2(MAX_X, SumMethod::FloorIdentity).unwrap();
        assert!(rec.count < 4_000_000_000_000);
        assert!(rec.normalized.unwrap().abs() < 10.0);
    }

    #[test]
    fn method_parsing() {
        assert_eq!("sieve".parse::<SumMethod>().unwrap(), SumMethod::Sieve);
        assert_eq!("floor_identity".parse::<SumMethod>().unwrap(), SumMethod::FloorIdentity);
        assert!("nope".parse::<SumMethod>().is_err());
    }
}
