mod common;

use circlelab::arith::{
    count_enumerate, count_floor_identity, count_floor_identity_direct, delta_normalized, r2_divisor,
    r2_enumerate, r2_residue, r2_sieve, r2_sieve_with, sum_r2, SieveConfig, SumMethod,
};
use common::golden;
use proptest::prelude::*;

#[test]
fn small_counts() {
    assert_eq!(sum_r2(0.0, SumMethod::Enumerate).unwrap().count, 1);
    assert_eq!(sum_r2(0.0, SumMethod::FloorIdentity).unwrap().delta, 1.0);
    assert_eq!(sum_r2(2.0, SumMethod::Sieve).unwrap().count, 9);
    assert_eq!(sum_r2(100.0, SumMethod::Enumerate).unwrap().count, 317);
    assert!(sum_r2(-1.0, SumMethod::Enumerate).is_err());
}

#[test]
fn delta_examples() {
    assert_eq!(delta_normalized(1.0).unwrap(), 5.0 - std::f64::consts::PI);
    let d4 = (13.0 - 4.0 * std::f64::consts::PI) / 4f64.powf(0.25);
    assert!((delta_normalized(4.0).unwrap() - d4).abs() < 1e-15);
    assert!(delta_normalized(0.0).is_err());
}

#[test]
fn counts_against_enumeration_goldens() {
    let g = golden("sweep");
    assert_eq!(count_enumerate(100) as f64, g.get("count_100").unwrap());
    assert_eq!(count_floor_identity(1_000_000) as f64, g.get("count_1e6").unwrap());
    let d = delta_normalized(1e6).unwrap();
    assert!((d - g.get("delta_normalized_1e6").unwrap()).abs() < 1e-12);
    let rec = sum_r2(100.0, SumMethod::FloorIdentity).unwrap();
    assert!((rec.delta - g.get("delta_100").unwrap()).abs() < 1e-12);
}

#[test]
fn segmented_sieve_matches_plain() {
    let plain =
        r2_sieve_with(300_000, &SieveConfig { segment_threshold: u64::MAX, ..SieveConfig::default() })
            .unwrap();
    for seg in [1usize, 7, 4096, 1 << 20] {
        let cfg = SieveConfig { segment_threshold: 0, segment_len: seg.max(1), ..SieveConfig::default() };
        assert_eq!(r2_sieve_with(300_000, &cfg).unwrap(), plain, "segment {seg}");
    }
}

#[test]
fn sieve_respects_memory_cap() {
    let cfg = SieveConfig { max_entries: 1000, ..SieveConfig::default() };
    assert!(r2_sieve_with(5000, &cfg).unwrap_err().is_resource());
}

#[test]
fn r2_growth_statistic() {
    // max over (N/10, N] of r2(n)/n^0.3, reported for N = 1e3 .. 1e6
    let table = r2_sieve(1_000_000).unwrap();
    let stat = |n: u64| {
        (n / 10 + 1..=n).map(|k| table.get(k).unwrap() as f64 / (k as f64).powf(0.3)).fold(0.0, f64::max)
    };
    let seq: Vec<f64> = [1_000, 10_000, 100_000, 1_000_000].iter().map(|&n| stat(n)).collect();
    println!("decade maxima of r2(n)/n^0.3: {seq:?}");
    assert!(seq.iter().all(|v| v.is_finite() && *v > 0.0));
}

proptest! {
    #[test]
    fn r2_routes_agree(n in 1u64..5_000_000) {
        let e = r2_enumerate(n);
        prop_assert_eq!(r2_divisor(n).unwrap(), e);
        prop_assert_eq!(r2_residue(n).unwrap(), e);
    }

    #[test]
    fn r2_is_multiple_of_four(n in 1u64..1_000_000_000_000) {
        prop_assert_eq!(r2_residue(n).unwrap() % 4, 0);
    }

    #[test]
    fn r2_multiplicative_on_coprime(a in 1u64..3000, b in 1u64..3000) {
        prop_assume!(gcd(a, b) == 1);
        let lhs = r2_residue(a * b).unwrap() / 4;
        prop_assert_eq!(lhs, r2_residue(a).unwrap() / 4 * (r2_residue(b).unwrap() / 4));
    }

    #[test]
    fn count_routes_agree(n in 0u64..2_000_000) {
        let f = count_floor_identity(n);
        prop_assert_eq!(f, count_enumerate(n));
        prop_assert_eq!(f, count_floor_identity_direct(n));
    }

    #[test]
    fn count_steps_by_r2(n in 1u64..10_000_000) {
        prop_assert_eq!(count_floor_identity(n) - count_floor_identity(n - 1), r2_enumerate(n));
    }

    #[test]
    fn count_is_constant_between_integers(n in 0u64..1_000_000, frac in 0.0f64..0.999) {
        let x = n as f64 + frac;
        prop_assert_eq!(sum_r2(x, SumMethod::FloorIdentity).unwrap().count, count_enumerate(n));
    }

    #[test]
    fn record_self_consistency(x in 1.0f64..1e9) {
        let r = sum_r2(x, SumMethod::FloorIdentity).unwrap();
        prop_assert_eq!(r.delta, r.count as f64 - std::f64::consts::PI * x);
        let n = r.normalized.unwrap();
        prop_assert!((n * x.powf(0.25) - r.delta).abs() <= 1e-12 * r.delta.abs().max(1e-300) + 1e-300);
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
