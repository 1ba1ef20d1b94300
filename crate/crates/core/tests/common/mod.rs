#![allow(dead_code)]

use std::path::PathBuf;

use circlelab::golden::{GoldenFile, GoldenStore};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn goldens() -> GoldenStore {
    GoldenStore::new(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens"))
}

pub fn golden(name: &str) -> GoldenFile {
    goldens().load(name).expect("golden file")
}

/// J₁(z) for integer `z` from the power series in binary fixed point, with
/// enough guard bits to absorb the cancellation between terms.
pub fn j1_series_exact(z: u64) -> f64 {
    let bits = (z as f64 * std::f64::consts::LOG2_E).ceil() as u64 + 96;
    let one = BigInt::from(1) << bits;
    let z2 = BigInt::from(z) * BigInt::from(z);
    // k = 0 term: z/2
    let mut term = (&one * BigInt::from(z)) >> 1u32;
    let mut sum = term.clone();
    let mut k: u64 = 0;
    loop {
        k += 1;
        term = -(term * &z2) / BigInt::from(4 * k as u128 * (k as u128 + 1));
        if term.is_zero() {
            break;
        }
        sum += &term;
        if k > 4 * z + 100 && term.abs() < BigInt::from(1) {
            break;
        }
    }
    // sum / 2^bits as f64, keeping 64 significant bits
    let shift = bits.saturating_sub(64);
    let top = (&sum >> shift).to_f64().expect("finite");
    top * 2f64.powi(-((bits - shift) as i32))
}

pub fn rel_close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * b.abs().max(f64::MIN_POSITIVE)
}
