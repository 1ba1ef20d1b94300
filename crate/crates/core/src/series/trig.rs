//! The signed odd-index trigonometric families `M_s, N_s` and their
//! Dirichlet-weighted outer sums `P_s, Q_s`, plus the Bessel-asymptotic
//! expansion of Δ(x) assembled from them.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use super::{CompensatedSum, SeriesEval};
use crate::error::{Error, Result};
use crate::special::c1;

fn check_common(s: f64, min_s: f64, k_terms: u64) -> Result<()> {
    if !(s > min_s) || !s.is_finite() {
        return Err(Error::domain(format!("exponent s must exceed {min_s}, got {s}")));
    }
    if k_terms == 0 {
        return Err(Error::domain("k_terms must be at least 1"));
    }
    Ok(())
}

/// `(M_s(a, b), N_s(a, b))` truncated after the first `k_terms` odd `k`:
/// `Σ (−1)^{(k+1)/2} {cos, sin}(a + b√k) / k^s`.
pub fn m_n_s(a: f64, b: f64, s: f64, k_terms: u64) -> Result<(f64, f64)> {
    check_common(s, 0.0, k_terms)?;
    let (mut m, mut n) = (CompensatedSum::default(), CompensatedSum::default());
    for j in 1..=k_terms {
        let k = (2 * j - 1) as f64;
        // (−1)^{(k+1)/2} = (−1)^j
        let sign = if j % 2 == 1 { -1.0 } else { 1.0 };
        let w = sign * k.powf(-s);
        let (sn, cs) = (a + b * k.sqrt()).sin_cos();
        m.add(w * cs);
        n.add(w * sn);
    }
    Ok((m.value(), n.value()))
}

/// `P_s(a, b) = Σ_{n ≤ n_terms} M_s(a, b√n)/n^s` and the sine analogue
/// `Q_s`, each inner sum cut at `k_terms` odd indices.
pub fn p_q_s(a: f64, b: f64, s: f64, n_terms: u64, k_terms: u64) -> Result<(SeriesEval, SeriesEval)> {
    check_common(s, 0.5, k_terms)?;
    if n_terms == 0 {
        return Err(Error::domain("n_terms must be at least 1"));
    }
    let (mut p, mut q) = (CompensatedSum::default(), CompensatedSum::default());
    let (mut last_p, mut last_q) = (0.0, 0.0);
    for n in 1..=n_terms {
        let nf = n as f64;
        let (mn, nn) = m_n_s(a, b * nf.sqrt(), s, k_terms)?;
        let w = nf.powf(-s);
        last_p = (w * mn).abs();
        last_q = (w * nn).abs();
        p.add(w * mn);
        q.add(w * nn);
    }
    Ok((
        SeriesEval::new(p.value(), n_terms, Some(k_terms), Some(last_p), "P_s")?,
        SeriesEval::new(q.value(), n_terms, Some(k_terms), Some(last_q), "Q_s")?,
    ))
}

/// Overall constant in front of the expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrigScale {
    /// Unscaled coefficients (leading term `x^{1/4}/π · P_{3/4}`).
    Unscaled,
    /// Multiplied by 4, the factor carried by `r₂(n) = 4 Σ_{d odd} χ(d)`.
    /// This is the normalization under which the expansion tracks Δ(x).
    LatticeCount,
}

impl TrigScale {
    fn factor(self) -> f64 {
        match self {
            TrigScale::Unscaled => 1.0,
            TrigScale::LatticeCount => 4.0,
        }
    }
}

/// The individual terms of the expansion at one `(x, N)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrigExpansionTerms {
    /// `x^{1/4}/π · P_{3/4}`.
    pub leading: f64,
    /// Entry `s − 1`: `(−1)^s c₁(2s) P_{s+3/4} / (2^{4s} π^{2s+1} x^{s−1/4})`, `s = 1..=N`.
    pub cosine: Vec<f64>,
    /// Entry `s`: `−(−1)^s c₁(2s+1) Q_{s+5/4} / (2^{4s+2} π^{2s+2} x^{s+1/4})`, `s = 0..=N`.
    pub sine: Vec<f64>,
    /// |contribution of the outer index `n = n_terms`| to the total.
    pub last_outer: f64,
}

impl TrigExpansionTerms {
    pub fn total(&self) -> f64 {
        self.leading + self.cosine.iter().sum::<f64>() + self.sine.iter().sum::<f64>()
    }
}

/// Evaluates every term of the expansion at `(a, b) = (π/4, 2π√x)` with all
/// `P/Q` truncated to `n ≤ n_terms`, `k` among the first `k_terms` odd
/// integers. `scale` multiplies every term.
pub fn trig_expansion_terms(
    x: f64,
    big_n: usize,
    n_terms: u64,
    k_terms: u64,
    scale: TrigScale,
) -> Result<TrigExpansionTerms> {
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::domain(format!("expansion needs x >= 1, got {x}")));
    }
    if x.fract() == 0.0 {
        return Err(Error::domain(format!(
            "expansion is compared off the jump points; x = {x} is an integer"
        )));
    }
    if big_n > 10 {
        return Err(Error::domain(format!("N must be at most 10, got {big_n}")));
    }
    if n_terms == 0 || k_terms == 0 {
        return Err(Error::domain("n_terms and k_terms must be at least 1"));
    }

    let b = 2.0 * PI * x.sqrt();
    // Coefficient of P_{s+3/4} and Q_{s+5/4}.
    let mut p_coef = Vec::with_capacity(big_n + 1);
    let mut q_coef = Vec::with_capacity(big_n + 1);
    for s in 0..=big_n {
        let sf = s as i32;
        let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        p_coef.push(if s == 0 {
            x.powf(0.25) / PI
        } else {
            sign * c1(2 * s)? / (2f64.powi(4 * sf) * PI.powi(2 * sf + 1) * x.powf(s as f64 - 0.25))
        });
        q_coef.push(
            -sign * c1(2 * s + 1)? / (2f64.powi(4 * sf + 2) * PI.powi(2 * sf + 2) * x.powf(s as f64 + 0.25)),
        );
    }

    let mut p_acc = vec![CompensatedSum::default(); big_n + 1];
    let mut q_acc = vec![CompensatedSum::default(); big_n + 1];
    let sqrt_k: Vec<f64> = (1..=k_terms).map(|j| ((2 * j - 1) as f64).sqrt()).collect();
    let mut last_outer = 0.0;
    for n in 1..=n_terms {
        let nf = n as f64;
        let sn = nf.sqrt();
        let mut row = 0.0;
        for (j, &sk) in sqrt_k.iter().enumerate() {
            let k = (2 * j + 1) as f64;
            let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
            let u = nf * k;
            let (sin, cos) = (FRAC_PI_4 + b * sn * sk).sin_cos();
            let inv_u = 1.0 / u;
            let mut wp = sign * u.powf(-0.75);
            let mut wq = wp * u.powf(-0.5);
            for s in 0..=big_n {
                let tp = wp * cos;
                let tq = wq * sin;
                p_acc[s].add(tp);
                q_acc[s].add(tq);
                row += p_coef[s] * tp + q_coef[s] * tq;
                wp *= inv_u;
                wq *= inv_u;
            }
        }
        if n == n_terms {
            last_outer = row.abs();
        }
    }

    let f = scale.factor();
    Ok(TrigExpansionTerms {
        leading: f * p_coef[0] * p_acc[0].value(),
        cosine: (1..=big_n).map(|s| f * p_coef[s] * p_acc[s].value()).collect(),
        sine: (0..=big_n).map(|s| f * q_coef[s] * q_acc[s].value()).collect(),
        last_outer: f * last_outer,
    })
}

/// Sum of [`trig_expansion_terms`], without the big-O remainder.
pub fn trig_expansion(
    x: f64,
    big_n: usize,
    n_terms: u64,
    k_terms: u64,
    scale: TrigScale,
) -> Result<SeriesEval> {
    let t = trig_expansion_terms(x, big_n, n_terms, k_terms, scale)?;
    SeriesEval::new(t.total(), n_terms, Some(k_terms), Some(t.last_outer), "trig expansion")
}
