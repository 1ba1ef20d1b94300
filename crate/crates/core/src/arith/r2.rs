//! Pointwise evaluation of r₂(n) by three unrelated routes.

use crate::error::{Error, Result};

/// Counts `(a, b)` with `a² + b² = n` by scanning every admissible `a`.
///
/// This is the ground truth the other two routes are checked against.
pub fn r2_enumerate(n: u64) -> u64 {
    let r = n.isqrt();
    let mut count = 0;
    for a in 0..=r {
        let rest = n - a * a;
        let b = rest.isqrt();
        if b * b != rest {
            continue;
        }
        // (±a, ±b), collapsing the signs of zero coordinates.
        let mult = match (a == 0, b == 0) {
            (true, true) => 1,
            (true, false) | (false, true) => 2,
            (false, false) => 4,
        };
        count += mult;
    }
    count
}

/// Nonprincipal character mod 4 on odd integers: `(-1)^((d-1)/2)`.
#[inline]
pub(crate) fn chi4(d: u64) -> i64 {
    match d & 3 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// `4 · Σ_{d | n, d odd} (-1)^((d-1)/2)`, enumerating divisor pairs up to √n.
pub fn r2_divisor(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("r2_divisor: the odd-divisor sum is undefined at n = 0"));
    }
    let mut sum: i64 = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let e = n / d;
            if d & 1 == 1 {
                sum += chi4(d);
            }
            if e != d && e & 1 == 1 {
                sum += chi4(e);
            }
        }
        d += 1;
    }
    debug_assert!(sum >= 0);
    Ok(4 * sum as u64)
}

/// `4 · (d₁(n) − d₃(n))` where `d_a` counts divisors congruent to `a` mod 4.
///
/// Only odd divisors are reduced mod 4 here; the odd part of `n` is
/// stripped first so every divisor visited is odd.
pub fn r2_residue(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("r2_residue: divisor classes are undefined at n = 0"));
    }
    let odd = n >> n.trailing_zeros();
    let (mut d1, mut d3) = (0u64, 0u64);
    let mut tally = |d: u64| match d % 4 {
        1 => d1 += 1,
        3 => d3 += 1,
        _ => unreachable!("odd part has only odd divisors"),
    };
    let mut d = 1;
    while d * d <= odd {
        if odd.is_multiple_of(d) {
            tally(d);
            if d * d != odd {
                tally(odd / d);
            }
        }
        d += 2;
    }
    // r₂(n) ≥ 0 forces d₁ ≥ d₃.
    Ok(4 * (d1 - d3))
}
