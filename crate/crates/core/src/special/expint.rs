//! Generalized exponential integral `E_ν(z) = ∫₁^∞ e^{−zt} t^{−ν} dt`.
//!
//! Defined here for real `ν ≥ 0` and complex `z` in the closed right half
//! plane minus the origin. On the imaginary axis the integral converges
//! only conditionally and needs `ν > 0`.
//!
//! `E_ν(z) = z^{ν−1} Γ(1−ν, z)`. For `|z| ≥ 2` the Legendre continued
//! fraction for the incomplete gamma function is used, which simplifies to
//! `E_ν(z) = e^{−z} / (z + ν − 1·ν/(z + ν + 2 − 2(ν+1)/(z + ν + 4 − …)))`.
//! Closer to the origin the power series is used instead.

use num_complex::Complex64;

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const CF_THRESHOLD: f64 = 2.0;
const MAX_CF_ITER: usize = 20_000;
const MAX_SERIES_ITER: usize = 500;
/// Orders this close to an integer take the integer-order series.
const INTEGER_SNAP: f64 = 1e-13;

pub fn expint(order: f64, z: Complex64) -> Result<Complex64> {
    if !order.is_finite() || order < 0.0 {
        return Err(Error::domain(format!("expint order must be finite and >= 0, got {order}")));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("expint argument must be finite"));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain("expint is singular at z = 0"));
    }
    if z.re < 0.0 {
        return Err(Error::domain(format!("expint needs Re(z) >= 0, got {z}")));
    }
    if z.re == 0.0 && order == 0.0 {
        return Err(Error::domain("E_0 diverges on the imaginary axis"));
    }
    if order == 0.0 {
        return Ok((-z).exp() / z);
    }
    let value = if z.norm() >= CF_THRESHOLD {
        continued_fraction(order, z)?
    } else {
        let rounded = order.round();
        if (order - rounded).abs() <= INTEGER_SNAP {
            series_integer(rounded as u32, z)?
        } else {
            series_fractional(order, z)?
        }
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("expint"))
    }
}

fn continued_fraction(order: f64, z: Complex64) -> Result<Complex64> {
    let tiny = 1e-300;
    let mut b = z + order;
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..=MAX_CF_ITER {
        let i = i as f64;
        let an = -i * (order - 1.0 + i);
        b += 2.0;
        d = an * d + b;
        if d.norm() < tiny {
            d = Complex64::new(tiny, 0.0);
        }
        c = b + an / c;
        if c.norm() < tiny {
            c = Complex64::new(tiny, 0.0);
        }
        d = d.inv();
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() <= 4.0 * f64::EPSILON {
            return Ok(h * (-z).exp());
        }
    }
    Err(Error::NoConvergence { what: "expint continued fraction", iterations: MAX_CF_ITER })
}

/// `E_n(z) = (−z)^{n−1}/(n−1)! (ψ(n) − ln z) − Σ_{k ≠ n−1} (−z)^k / ((k−n+1) k!)`.
fn series_integer(n: u32, z: Complex64) -> Result<Complex64> {
    let nm1 = (n - 1) as usize;
    let psi = -EULER_GAMMA + (1..n).map(|k| 1.0 / k as f64).sum::<f64>();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0); // (−z)^k / k!
    let mut special = Complex64::new(0.0, 0.0);
    for k in 0..MAX_SERIES_ITER {
        if k == nm1 {
            special = pow;
        } else {
            let term = pow / (k as f64 - nm1 as f64);
            sum += term;
            if k > nm1 && term.norm() <= f64::EPSILON * sum.norm() {
                return Ok(special * (psi - z.ln()) - sum);
            }
        }
        pow *= -z / (k + 1) as f64;
    }
    Err(Error::NoConvergence { what: "expint integer series", iterations: MAX_SERIES_ITER })
}

/// `E_ν(z) = Γ(1−ν) z^{ν−1} − Σ_k (−z)^k / (k! (1−ν+k))` for non-integer ν.
fn series_fractional(order: f64, z: Complex64) -> Result<Complex64> {
    let a = 1.0 - order;
    let gamma = libm::tgamma(a);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    for k in 0..MAX_SERIES_ITER {
        let term = pow / (a + k as f64);
        sum += term;
        if k > 0 && term.norm() <= f64::EPSILON * sum.norm() {
            return Ok(gamma * z.powf(order - 1.0) - sum);
        }
        pow *= -z / (k + 1) as f64;
    }
    Err(Error::NoConvergence { what: "expint series", iterations: MAX_SERIES_ITER })
}
