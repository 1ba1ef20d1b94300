//! Partial sums of `cos(2π√(nx) + π/4)` against power weights.

use std::f64::consts::{FRAC_PI_4, PI};

use super::{check_positive, CompensatedSum, SeriesEval};
use crate::arith::{chi4, R2Table};
use crate::error::{Error, Result};

#[inline]
pub(crate) fn phase_cos(n: f64, x: f64) -> f64 {
    (2.0 * PI * (n * x).sqrt() + FRAC_PI_4).cos()
}

/// `Σ_{n ≤ m} cos(2π√(nx) + π/4) n^{−exponent}` and the last term.
pub(crate) fn cos_power_sum(x: f64, m: u64, exponent: f64) -> (f64, f64) {
    let mut acc = CompensatedSum::default();
    let mut last = 0.0;
    for n in 1..=m {
        let nf = n as f64;
        last = phase_cos(nf, x) * nf.powf(-exponent);
        acc.add(last);
    }
    (acc.value(), last)
}

/// Running partial sums of `cos(2π√(nx) + π/4) n^{−exponent}`, entry `n − 1`.
pub fn cos_power_partials(x: f64, m: u64, exponent: f64) -> Result<Vec<f64>> {
    check_positive(x, "x")?;
    let mut acc = CompensatedSum::default();
    Ok((1..=m)
        .map(|n| {
            let nf = n as f64;
            acc.add(phase_cos(nf, x) * nf.powf(-exponent));
            acc.value()
        })
        .collect())
}

/// `S_M(x) = Σ_{n ≤ M} r₂(n) cos(2π√(nx) + π/4) / n^{3/4}`.
pub fn s_partial(x: f64, m_terms: u64, r2: &R2Table) -> Result<SeriesEval> {
    check_positive(x, "x")?;
    if m_terms == 0 {
        return Err(Error::domain("m_terms must be at least 1"));
    }
    r2.ensure_covers(m_terms, "s_partial")?;
    let mut acc = CompensatedSum::default();
    let mut last = None;
    for n in 1..=m_terms {
        let r = r2.get(n).expect("covered");
        if r == 0 {
            continue;
        }
        let nf = n as f64;
        let t = r as f64 * phase_cos(nf, x) * nf.powf(-0.75);
        acc.add(t);
        last = Some(t.abs());
    }
    SeriesEval::new(acc.value(), m_terms, None, last, "s_partial")
}

/// `S_M` regrouped over `(n, p)`, `p` odd, `np ≤ M`:
/// `4 Σ (−1)^{(p−1)/2} cos(2π√(npx) + π/4) / (np)^{3/4}`.
pub fn s_partial_double_sum(x: f64, m_terms: u64) -> Result<f64> {
    check_positive(x, "x")?;
    let mut acc = CompensatedSum::default();
    for p in (1..=m_terms).step_by(2) {
        let sign = 4.0 * chi4(p) as f64;
        for n in 1..=m_terms / p {
            let np = (n * p) as f64;
            acc.add(sign * phase_cos(np, x) * np.powf(-0.75));
        }
    }
    Ok(acc.value())
}

/// `D_M(x) = Σ_{n ≤ M} cos(2π√(nx) + π/4) / n^{3/4 − δ}` for `0 < δ < 1/4`.
pub fn d_partial(x: f64, m_terms: u64, delta: f64) -> Result<SeriesEval> {
    if !(delta > 0.0 && delta < 0.25) {
        return Err(Error::domain(format!("delta must lie in (0, 1/4), got {delta}")));
    }
    check_positive(x, "x")?;
    if m_terms == 0 {
        return Err(Error::domain("m_terms must be at least 1"));
    }
    let (v, last) = cos_power_sum(x, m_terms, 0.75 - delta);
    SeriesEval::new(v, m_terms, None, Some(last.abs()), "d_partial")
}

/// `G(h, x, M) = Σ_{n ≤ M} cos(2π√(nx) + π/4) / n^{3/4 − h}` for `0 ≤ h < 1/4`.
pub fn g_partial(h: f64, x: f64, m_terms: u64) -> Result<f64> {
    if !(0.0..0.25).contains(&h) {
        return Err(Error::domain(format!("h must lie in [0, 1/4), got {h}")));
    }
    check_positive(x, "x")?;
    Ok(cos_power_sum(x, m_terms, 0.75 - h).0)
}

/// `∂G/∂h = Σ_{n ≤ M} cos(2π√(nx) + π/4) ln n / n^{3/4 − h}`.
pub fn g_partial_dh(h: f64, x: f64, m_terms: u64) -> Result<f64> {
    if !(0.0..0.25).contains(&h) {
        return Err(Error::domain(format!("h must lie in [0, 1/4), got {h}")));
    }
    check_positive(x, "x")?;
    let mut acc = CompensatedSum::default();
    for n in 2..=m_terms {
        let nf = n as f64;
        acc.add(phase_cos(nf, x) * nf.ln() * nf.powf(h - 0.75));
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::r2_sieve;

    #[test]
    fn single_terms() {
        let t = r2_sieve(10).unwrap();
        let x: f64 = 3.7;
        let c = (2.0 * PI * x.sqrt() + FRAC_PI_4).cos();
        assert!((s_partial(x, 1, &t).unwrap().value - 4.0 * c).abs() < 1e-15);
        assert!((d_partial(x, 1, 0.1).unwrap().value - c).abs() < 1e-15);
        assert!((g_partial(0.0, x, 1).unwrap() - c).abs() < 1e-15);
    }

    #[test]
    fn ranges_enforced() {
        assert!(d_partial(2.0, 10, 0.0).is_err());
        assert!(d_partial(2.0, 10, 0.25).is_err());
        assert!(d_partial(2.0, 0, 0.1).is_err());
        assert!(g_partial(0.25, 2.0, 10).is_err());
        assert!(g_partial(-0.01, 2.0, 10).is_err());
        assert!(s_partial(2.0, 11, &r2_sieve(10).unwrap()).is_err());
    }

    #[test]
    fn g_at_delta_is_d() {
        for (x, m, d) in [(2.0, 1000u64, 0.125), (7.1, 333, 0.2)] {
            assert_eq!(g_partial(d, x, m).unwrap(), d_partial(x, m, d).unwrap().value);
        }
    }

    #[test]
    fn double_sum_regrouping() {
        let t = r2_sieve(5000).unwrap();
        for x in [1.0, 2.0, 10.5] {
            for m in [1u64, 9, 100, 5000] {
                let a = s_partial(x, m, &t).unwrap().value;
                let b = s_partial_double_sum(x, m).unwrap();
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "x {x} m {m}");
            }
        }
    }

    #[test]
    fn h_derivative_matches_finite_difference() {
        for (x, m) in [(2.0, 2000u64), (5.3, 500)] {
            let h = 1e-5;
            let fd = (g_partial(h, x, m).unwrap() - g_partial(0.0, x, m).unwrap()) / h;
            let an = g_partial_dh(h / 2.0, x, m).unwrap();
            assert!((fd - an).abs() <= 1e-6 * an.abs().max(1.0), "x {x}: {fd} vs {an}");
        }
    }

    #[test]
    fn partials_running() {
        let run = cos_power_partials(2.0, 100, 0.5).unwrap();
        assert_eq!(run.len(), 100);
        assert!((run[99] - cos_power_sum(2.0, 100, 0.5).0).abs() < 1e-14);
    }
}
