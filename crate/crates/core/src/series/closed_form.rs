//! Closed-form right-hand sides paired with the partial sums they are meant
//! to replace. Residuals are outputs, never assumed to vanish.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use num_complex::Complex64;

use super::partial::cos_power_sum;
use super::{check_positive, ClosedFormReport};
use crate::error::{Error, Result};
use crate::special::{expint, fresnel};

/// Tolerance on the imaginary part of the conjugate-pair expressions.
pub const IMAG_TOLERANCE: f64 = 1e-8;

fn check_m(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::domain("m_terms must be at least 1"));
    }
    Ok(())
}

/// `Σ_{n ≤ M} cos(2π√(na) + π/4)/n^{3/4}` against
/// `(2F_C(2(aM)^{1/4}) − 2F_C(2a^{1/4}) + 2F_S(2a^{1/4}) − 2F_S(2(aM)^{1/4})) / (√2 a^{1/4})
///  + (cos 2π√a − sin 2π√a)/√2`.
pub fn fresnel_closed_form(a: f64, m_terms: u64) -> Result<ClosedFormReport> {
    check_positive(a, "a")?;
    check_m(m_terms)?;
    let (lhs, _) = cos_power_sum(a, m_terms, 0.75);
    let a4 = a.powf(0.25);
    let (c_lo, s_lo) = fresnel(2.0 * a4)?;
    let (c_hi, s_hi) = fresnel(2.0 * (a * m_terms as f64).powf(0.25))?;
    let root = 2.0 * PI * a.sqrt();
    let rhs = (-2.0 * c_lo + 2.0 * c_hi + 2.0 * s_lo - 2.0 * s_hi) / (SQRT_2 * a4)
        + (root.cos() - root.sin()) / SQRT_2;
    ClosedFormReport::new(lhs, rhs, &[("a", a), ("m", m_terms as f64)])
}

/// `√2 + 4/(√2 a^{1/4})`, an a-priori bound on the Fresnel right side using
/// `0 ≤ F_C, F_S ≤ 1` on the positive axis.
pub fn fresnel_closed_form_bound(a: f64) -> f64 {
    SQRT_2 + 4.0 / (SQRT_2 * a.powf(0.25))
}

/// `D(ε, x, y²) = Σ_{n ≤ y²} cos(2π√(nx) + π/4)/n^{1/2+ε/2}` against its
/// nine-term exponential-integral right side.
pub fn expint_closed_form(eps: f64, x: f64, y: f64) -> Result<ClosedFormReport> {
    check_positive(eps, "eps")?;
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::domain(format!("x must be >= 1, got {x}")));
    }
    if !(y >= 1.0) || !y.is_finite() {
        return Err(Error::domain(format!("y must be >= 1, got {y}")));
    }
    let m = (y * y).floor() as u64;
    let (lhs, _) = cos_power_sum(x, m, 0.5 + 0.5 * eps);

    let w = 2.0 * PI * x.sqrt();
    let yp = y.powf(1.0 - eps);
    let up = Complex64::new(1.0, 1.0) / SQRT_2;
    let down = Complex64::new(1.0, -1.0) / SQRT_2;
    let e = |im: f64| expint(eps, Complex64::new(0.0, im));
    let wy = w * y;
    let rhs = -up * yp * e(-wy)? - down * yp * e(wy)?
        + up * e(-w)?
        + down * e(w)?
        + yp * wy.sin() / SQRT_2
        + yp * (wy + FRAC_PI_4).cos()
        - yp * wy.cos() / SQRT_2
        - w.sin() / SQRT_2
        + w.cos() / SQRT_2;
    check_real(rhs, "expint closed form")?;
    let mut report =
        ClosedFormReport::new(lhs, rhs.re, &[("eps", eps), ("x", x), ("y", y), ("m", m as f64)])?;
    report.params.insert("rhs_imag".into(), rhs.im);
    Ok(report)
}

/// `lim_{y→∞}` of the exponential-integral right side:
/// `((1+i)E_ε(−2iπ√x) + (1−i)E_ε(2iπ√x) − sin 2π√x + cos 2π√x)/√2`.
pub fn f_eps_limit(eps: f64, x: f64) -> Result<f64> {
    check_positive(eps, "eps")?;
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::domain(format!("x must be >= 1, got {x}")));
    }
    let w = 2.0 * PI * x.sqrt();
    let v = (Complex64::new(1.0, 1.0) * expint(eps, Complex64::new(0.0, -w))?
        + Complex64::new(1.0, -1.0) * expint(eps, Complex64::new(0.0, w))?
        - w.sin()
        + w.cos())
        / SQRT_2;
    check_real(v, "f_eps_limit")?;
    Ok(v.re)
}

fn check_real(v: Complex64, what: &str) -> Result<()> {
    if v.im.abs() > IMAG_TOLERANCE * v.re.abs().max(1.0) {
        return Err(Error::Inconsistent(format!("{what}: conjugate pair left an imaginary part {:e}", v.im)));
    }
    Ok(())
}

/// `Σ_{n ≤ M} cos(2π√(nx) + π/4)/√n` against
/// `(sin(2π√(xM) + π/4) − sin(2π√x + π/4))/(π√x) + cos(2π√x + π/4)`.
///
/// At `x = 2` the alternative form
/// `(sin 2π√(2M) + cos 2π√(2M) + C)/(2π)` with
/// `C = −(1+√2π) sin 2√2π + (√2π − 1) cos 2√2π` is evaluated as well and
/// must agree to 10⁻⁸; it is stored under `params["x2_rhs"]`.
pub fn sqrt_closed_form(x: f64, m_terms: u64) -> Result<ClosedFormReport> {
    check_positive(x, "x")?;
    check_m(m_terms)?;
    let (lhs, _) = cos_power_sum(x, m_terms, 0.5);
    let sx = x.sqrt();
    let rhs = ((2.0 * PI * (x * m_terms as f64).sqrt() + FRAC_PI_4).sin()
        - (2.0 * PI * sx + FRAC_PI_4).sin())
        / (PI * sx)
        + (2.0 * PI * sx + FRAC_PI_4).cos();
    let mut report = ClosedFormReport::new(lhs, rhs, &[("x", x), ("m", m_terms as f64)])?;
    if x == 2.0 {
        let alt = sqrt_closed_form_x2(m_terms);
        if (alt - rhs).abs() > 1e-8 {
            return Err(Error::Inconsistent(format!("x = 2 closed forms disagree: {alt} vs {rhs}")));
        }
        report.params.insert("x2_rhs".into(), alt);
    }
    Ok(report)
}

/// The `x = 2` specialization, divided through by `2π`.
pub fn sqrt_closed_form_x2(m_terms: u64) -> f64 {
    let t = 2.0 * PI * (2.0 * m_terms as f64).sqrt();
    let r2pi = SQRT_2 * PI;
    let theta = 2.0 * SQRT_2 * PI;
    let c = -(1.0 + r2pi) * theta.sin() + (r2pi - 1.0) * theta.cos();
    (t.sin() + t.cos() + c) / (2.0 * PI)
}
