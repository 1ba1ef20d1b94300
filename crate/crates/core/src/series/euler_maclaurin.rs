//! Euler–Maclaurin evaluation of `Σ_{k=a}^{M} F(k)` for
//! `F(t) = cos(2π√(tx) + π/4) / t^{3/4 − δ}`.

use std::f64::consts::{FRAC_PI_4, PI};

use super::{CompensatedSum, SeriesEval};
use crate::error::{Error, Result};
use crate::quad::integrate_pieces;

const QUAD_TOL: f64 = 1e-9;
/// Remainder constant applied to `Σ sup |F⁽⁴⁾|` over unit intervals.
const REMAINDER_CONSTANT: f64 = 1.0 / 120.0;

/// Parameters of the summand `F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmIntegrand {
    pub x: f64,
    pub delta: f64,
}

impl EmIntegrand {
    pub fn new(x: f64, delta: f64) -> Result<Self> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::domain(format!("x must be positive, got {x}")));
        }
        if !(delta > 0.0 && delta < 0.25) {
            return Err(Error::domain(format!("delta must lie in (0, 1/4), got {delta}")));
        }
        Ok(EmIntegrand { x, delta })
    }

    fn alpha(&self) -> f64 {
        0.75 - self.delta
    }

    fn omega(&self) -> f64 {
        2.0 * PI * self.x.sqrt()
    }
}

pub fn em_integrand(f: &EmIntegrand, t: f64) -> f64 {
    (f.omega() * t.sqrt() + FRAC_PI_4).cos() * t.powf(-f.alpha())
}

/// `F′(t) = (δ − 3/4) cos(2π√(xt) + π/4)/t^{7/4−δ} − π√x sin(2π√(xt) + π/4)/t^{5/4−δ}`.
pub fn em_integrand_derivative(f: &EmIntegrand, t: f64) -> f64 {
    let (s, c) = (f.omega() * t.sqrt() + FRAC_PI_4).sin_cos();
    (f.delta - 0.75) * c * t.powf(f.delta - 1.75) - PI * f.x.sqrt() * s * t.powf(f.delta - 1.25)
}

/// Upper envelope for `|F⁽⁴⁾(t)|`, decreasing in `t`.
///
/// `F = Re(e^{iπ/4} e^{iφ} t^{−α})` with `φ = ω√t`. Leibniz splits the
/// fourth derivative into `e^{iφ}` derivatives, bounded by complete Bell
/// polynomials in `|φ^{(m)}|`, times derivatives of `t^{−α}`, bounded by
/// rising factorials. Every coefficient is positive, so replacing each
/// factor by its modulus gives a bound.
pub fn em_fourth_derivative_envelope(f: &EmIntegrand, t: f64) -> f64 {
    let w = f.omega();
    let a = f.alpha();
    let y1 = 0.5 * w * t.powf(-0.5);
    let y2 = 0.25 * w * t.powf(-1.5);
    let y3 = 0.375 * w * t.powf(-2.5);
    let y4 = 0.9375 * w * t.powf(-3.5);
    let bell = [
        1.0,
        y1,
        y1 * y1 + y2,
        y1.powi(3) + 3.0 * y1 * y2 + y3,
        y1.powi(4) + 6.0 * y1 * y1 * y2 + 4.0 * y1 * y3 + 3.0 * y2 * y2 + y4,
    ];
    let rising = |m: usize| (0..m).map(|i| a + i as f64).product::<f64>();
    let binom = [1.0, 4.0, 6.0, 4.0, 1.0];
    (0..=4).map(|j| binom[j] * bell[j] * rising(4 - j) * t.powf(-a - (4 - j) as f64)).sum()
}

/// `∫_a^M F(t) dt`, integrated in `u = √t` with breakpoints at every full
/// period of the cosine.
pub fn em_integral(f: &EmIntegrand, a: f64, m: f64) -> Result<f64> {
    if !(a >= 1.0) || !(m >= a) {
        return Err(Error::domain(format!("need 1 <= a <= M, got a = {a}, M = {m}")));
    }
    let (lo, hi) = (a.sqrt(), m.sqrt());
    let period = 1.0 / f.x.sqrt();
    let mut points = vec![lo];
    let mut k = (lo / period).floor() + 1.0;
    while k * period < hi {
        points.push(k * period);
        k += 1.0;
    }
    points.push(hi);
    let alpha = f.alpha();
    let omega = f.omega();
    let q = integrate_pieces(
        |u: f64| 2.0 * u.powf(1.0 - 2.0 * alpha) * (omega * u + FRAC_PI_4).cos(),
        &points,
        QUAD_TOL,
    )?;
    Ok(q.value)
}

/// `∫_a^M F + (F(a) + F(M))/2 + (F′(M) − F′(a))/12`, with
/// `tail_estimate = (1/120) Σ_{k=a}^{M−1} sup_{[k,k+1]} |F⁽⁴⁾|`.
pub fn euler_maclaurin(f: &EmIntegrand, a: u64, m_terms: u64) -> Result<SeriesEval> {
    if a == 0 {
        return Err(Error::domain("euler_maclaurin needs a >= 1"));
    }
    if m_terms < a {
        return Err(Error::domain(format!("upper index {m_terms} is below a = {a}")));
    }
    let (af, mf) = (a as f64, m_terms as f64);
    let integral = em_integral(f, af, mf)?;
    let endpoints = 0.5 * (em_integrand(f, af) + em_integrand(f, mf));
    let slopes = (em_integrand_derivative(f, mf) - em_integrand_derivative(f, af)) / 12.0;
    let mut bound = CompensatedSum::default();
    for k in a..m_terms {
        bound.add(em_fourth_derivative_envelope(f, k as f64));
    }
    SeriesEval::new(
        integral + endpoints + slopes,
        m_terms,
        None,
        Some(REMAINDER_CONSTANT * bound.value()),
        "euler_maclaurin",
    )
}
