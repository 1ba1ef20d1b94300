//! The Hardy–Voronoi Bessel series for the lattice count.

use std::f64::consts::PI;

use super::{check_positive, CompensatedSum, SeriesEval};
use crate::arith::{chi4, R2Table};
use crate::error::{Error, Result};
use crate::special::{bessel_j1, BesselPolicy};

fn check_x(x: f64) -> Result<()> {
    check_positive(x, "x")?;
    if x.fract() == 0.0 {
        return Err(Error::domain(format!(
            "voronoi series is evaluated off the jump points; x = {x} is an integer"
        )));
    }
    Ok(())
}

/// Running values `πx + √x Σ_{n ≤ N} r₂(n)/√n · J₁(2π√(nx))` for
/// `N = 1, …, n_terms` (entry `N − 1`).
pub fn voronoi_running(x: f64, n_terms: u64, r2: &R2Table, policy: &BesselPolicy) -> Result<Vec<f64>> {
    check_x(x)?;
    if n_terms == 0 {
        return Err(Error::domain("voronoi needs at least one term"));
    }
    r2.ensure_covers(n_terms, "voronoi")?;
    let sx = x.sqrt();
    let mut acc = CompensatedSum::default();
    acc.add(PI * x);
    let mut out = Vec::with_capacity(n_terms as usize);
    for (n, &r) in r2.values()[1..=n_terms as usize].iter().enumerate() {
        if r != 0 {
            let n = (n + 1) as f64;
            acc.add(sx * r as f64 / n.sqrt() * bessel_j1(2.0 * PI * (n * x).sqrt(), policy));
        }
        out.push(acc.value());
    }
    Ok(out)
}

/// Truncated Hardy–Voronoi series at a non-integer `x`.
pub fn voronoi_partial(x: f64, n_terms: u64, r2: &R2Table, policy: &BesselPolicy) -> Result<SeriesEval> {
    check_x(x)?;
    if n_terms == 0 {
        return Err(Error::domain("voronoi needs at least one term"));
    }
    r2.ensure_covers(n_terms, "voronoi")?;
    let sx = x.sqrt();
    let mut acc = CompensatedSum::default();
    acc.add(PI * x);
    let mut last = None;
    for n in 1..=n_terms {
        let r = r2.get(n).expect("covered");
        if r == 0 {
            continue;
        }
        let nf = n as f64;
        let term = sx * r as f64 / nf.sqrt() * bessel_j1(2.0 * PI * (nf * x).sqrt(), policy);
        acc.add(term);
        last = Some(term.abs());
    }
    SeriesEval::new(acc.value(), n_terms, None, last, "voronoi")
}

/// `Σ_{n ≤ m} r₂(n)/√n · J₁(2π√(nx))`, without the `πx` and `√x` factors.
pub fn voronoi_bessel_sum(x: f64, m: u64, r2: &R2Table, policy: &BesselPolicy) -> Result<f64> {
    check_positive(x, "x")?;
    r2.ensure_covers(m, "voronoi")?;
    let mut acc = CompensatedSum::default();
    for n in 1..=m {
        let r = r2.get(n).expect("covered");
        if r != 0 {
            let nf = n as f64;
            acc.add(r as f64 / nf.sqrt() * bessel_j1(2.0 * PI * (nf * x).sqrt(), policy));
        }
    }
    Ok(acc.value())
}

/// The same finite sum regrouped over pairs `(n, p)`, `p` odd, `np ≤ m`:
/// `4 Σ (−1)^{(p−1)/2} (np)^{−1/2} J₁(2π√(npx))`.
pub fn voronoi_bessel_sum_rearranged(x: f64, m: u64, policy: &BesselPolicy) -> Result<f64> {
    check_positive(x, "x")?;
    let mut acc = CompensatedSum::default();
    for p in (1..=m).step_by(2) {
        let sign = chi4(p) as f64;
        for n in 1..=m / p {
            let np = (n * p) as f64;
            acc.add(4.0 * sign / np.sqrt() * bessel_j1(2.0 * PI * (np * x).sqrt(), policy));
        }
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::r2_sieve;

    #[test]
    fn rejects_integer_x_and_short_tables() {
        let t = r2_sieve(10).unwrap();
        let p = BesselPolicy::default();
        assert!(voronoi_partial(3.0, 5, &t, &p).is_err());
        assert!(voronoi_partial(-0.5, 5, &t, &p).is_err());
        assert!(voronoi_partial(0.5, 11, &t, &p).is_err());
        assert!(voronoi_partial(0.5, 0, &t, &p).is_err());
        assert!(voronoi_partial(0.5, 10, &t, &p).is_ok());
    }

    #[test]
    fn running_matches_partial() {
        let t = r2_sieve(500).unwrap();
        let p = BesselPolicy::default();
        let run = voronoi_running(3.5, 500, &t, &p).unwrap();
        for n in [1u64, 17, 250, 500] {
            let v = voronoi_partial(3.5, n, &t, &p).unwrap();
            assert!((run[n as usize - 1] - v.value).abs() < 1e-12);
        }
    }

    #[test]
    fn rearrangement_is_a_regrouping() {
        let t = r2_sieve(2000).unwrap();
        let p = BesselPolicy::default();
        for x in [0.5, 2.5, 10.5, 7.25] {
            for m in [1u64, 2, 10, 333, 2000] {
                let a = voronoi_bessel_sum(x, m, &t, &p).unwrap();
                let b = voronoi_bessel_sum_rearranged(x, m, &p).unwrap();
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "x {x} m {m}: {a} vs {b}");
            }
        }
    }
}
