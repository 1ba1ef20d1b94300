//! Bessel J₁ by power series and by the large-argument Hankel expansion.

use std::f64::consts::{FRAC_PI_4, PI};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `m` accepted by [`c1`].
pub const C1_MAX_ORDER: usize = 60;
/// Largest `n_terms` accepted by [`bessel_j1_asymptotic`].
pub const ASYMPTOTIC_MAX_TERMS: usize = 30;

/// Hankel coefficients `c₁(m) = (−1)^m (−½)_m (3/2)_m / m!`.
///
/// Built once by the product recurrence. Two entries beyond
/// `2·ASYMPTOTIC_MAX_TERMS` are kept for the remainder bound.
#[derive(Debug, Clone)]
pub struct CoefficientCache {
    c1: Vec<f64>,
}

impl CoefficientCache {
    pub fn new(max_order: usize) -> Self {
        let mut c1 = Vec::with_capacity(max_order + 1);
        c1.push(1.0);
        for m in 1..=max_order {
            let k = (m - 1) as f64;
            let prev = c1[m - 1];
            c1.push(-prev * (-0.5 + k) * (1.5 + k) / m as f64);
        }
        CoefficientCache { c1 }
    }

    pub fn global() -> &'static CoefficientCache {
        static CACHE: OnceLock<CoefficientCache> = OnceLock::new();
        CACHE.get_or_init(|| CoefficientCache::new(2 * ASYMPTOTIC_MAX_TERMS + 2))
    }

    pub fn get(&self, m: usize) -> Option<f64> {
        self.c1.get(m).copied()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.c1
    }
}

pub fn c1(m: usize) -> Result<f64> {
    if m > C1_MAX_ORDER {
        return Err(Error::domain(format!("c1: order {m} exceeds {C1_MAX_ORDER}")));
    }
    Ok(CoefficientCache::global().c1[m])
}

/// Truncated power series `Σ_{k<terms} (−1)^k (z/2)^{2k+1} / (k! (k+1)!)`.
pub fn bessel_j1_series(z: f64, terms: usize) -> f64 {
    let q = -0.25 * z * z;
    let mut t = 0.5 * z;
    let mut sum = t;
    for k in 0..terms.saturating_sub(1) {
        t *= q / ((k + 1) * (k + 2)) as f64;
        sum += t;
    }
    sum
}

/// Result of the truncated Hankel expansion with its error readings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticEval {
    pub value: f64,
    /// `√(2/πz) |c₁(2N+1)| / (2z)^{2N+1}`, the first term left out.
    pub first_omitted: f64,
    /// The first omitted term divided by `z`.
    pub scaled_by_inverse_z: f64,
    /// Sum of the first omitted cosine and sine terms; bounds the true
    /// error for real `z`.
    pub error_bound: f64,
}

/// `√(2/(πz)) [cos(z − 3π/4) P_N(z) − sin(z − 3π/4) Q_N(z)]` with
/// `P_N = Σ_{n ≤ N} (−1)^n c₁(2n)/(2z)^{2n}` and
/// `Q_N = Σ_{n < N} (−1)^n c₁(2n+1)/(2z)^{2n+1}`.
pub fn bessel_j1_asymptotic(z: f64, n_terms: usize) -> Result<AsymptoticEval> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain(format!("asymptotic J1 needs finite z > 0, got {z}")));
    }
    if n_terms == 0 || n_terms > ASYMPTOTIC_MAX_TERMS {
        return Err(Error::domain(format!(
            "asymptotic J1: n_terms must be in 1..={ASYMPTOTIC_MAX_TERMS}, got {n_terms}"
        )));
    }
    let c = CoefficientCache::global().as_slice();
    let inv = 1.0 / (2.0 * z);
    let mut p = 0.0;
    let mut q = 0.0;
    let mut w = 1.0;
    let mut sign = 1.0;
    for n in 0..=n_terms {
        p += sign * c[2 * n] * w;
        w *= inv;
        if n < n_terms {
            q += sign * c[2 * n + 1] * w;
        }
        w *= inv;
        sign = -sign;
    }
    let chi = z - 3.0 * FRAC_PI_4;
    let pref = (2.0 / (PI * z)).sqrt();
    let value = pref * (chi.cos() * p - chi.sin() * q);

    let m = 2 * n_terms + 1;
    let t_m = c[m].abs() * inv.powi(m as i32);
    let t_next = c[m + 1].abs() * inv.powi(m as i32 + 1);
    let first_omitted = pref * t_m;
    Ok(AsymptoticEval {
        value,
        first_omitted,
        scaled_by_inverse_z: first_omitted / z,
        error_bound: pref * (t_m + t_next),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BesselMethod {
    Series,
    Asymptotic,
    Auto,
}

/// How [`bessel_j1`] picks between the two expansions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselPolicy {
    method: BesselMethod,
    series_terms: usize,
    asymptotic_terms: usize,
    switch_point: f64,
}

impl Default for BesselPolicy {
    /// Series below |z| = 12, eleven Hankel terms above. Both sides are
    /// within about 10⁻¹² of J₁ at the switch.
    fn default() -> Self {
        BesselPolicy {
            method: BesselMethod::Auto,
            series_terms: 60,
            asymptotic_terms: 11,
            switch_point: 12.0,
        }
    }
}

impl BesselPolicy {
    pub fn new(
        method: BesselMethod,
        series_terms: usize,
        asymptotic_terms: usize,
        switch_point: f64,
    ) -> Result<Self> {
        if series_terms == 0 {
            return Err(Error::domain("series_terms must be positive"));
        }
        if asymptotic_terms == 0 || asymptotic_terms > ASYMPTOTIC_MAX_TERMS {
            return Err(Error::domain(format!("asymptotic_terms must be in 1..={ASYMPTOTIC_MAX_TERMS}")));
        }
        if !(switch_point > 0.0) || !switch_point.is_finite() {
            return Err(Error::domain("switch_point must be a positive real"));
        }
        // Every kept term and the first omitted one must still be shrinking
        // at the switch point, otherwise the expansion is past its optimum.
        let c = CoefficientCache::global().as_slice();
        let two_z = 2.0 * switch_point;
        for m in 0..=2 * asymptotic_terms {
            if c[m + 1].abs() >= c[m].abs() * two_z {
                return Err(Error::domain(format!(
                    "{asymptotic_terms} asymptotic terms diverge at switch point {switch_point} (term {})",
                    m + 1
                )));
            }
        }
        Ok(BesselPolicy { method, series_terms, asymptotic_terms, switch_point })
    }

    pub fn series(terms: usize) -> Result<Self> {
        let d = Self::default();
        Self::new(BesselMethod::Series, terms, d.asymptotic_terms, d.switch_point)
    }

    pub fn method(&self) -> BesselMethod {
        self.method
    }

    pub fn series_terms(&self) -> usize {
        self.series_terms
    }

    pub fn asymptotic_terms(&self) -> usize {
        self.asymptotic_terms
    }

    pub fn switch_point(&self) -> f64 {
        self.switch_point
    }
}

/// J₁(z) for real `z`, extended to negative arguments by oddness.
pub fn bessel_j1(z: f64, policy: &BesselPolicy) -> f64 {
    if z == 0.0 {
        return 0.0;
    }
    if z < 0.0 {
        return -bessel_j1(-z, policy);
    }
    let use_series = match policy.method {
        BesselMethod::Series => true,
        BesselMethod::Asymptotic => false,
        BesselMethod::Auto => z < policy.switch_point,
    };
    if use_series {
        bessel_j1_series(z, policy.series_terms)
    } else {
        bessel_j1_asymptotic(z, policy.asymptotic_terms).expect("policy validated at construction").value
    }
}
