//! Fresnel integrals C(z) = ∫₀^z cos(πt²/2) dt and S(z) = ∫₀^z sin(πt²/2) dt.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Below this the power series is used; above it the auxiliary functions.
const SERIES_LIMIT: f64 = 1.5;
const MAX_ITER: usize = 200;

/// Returns `(C(z), S(z))` for `z ≥ 0`.
pub fn fresnel(z: f64) -> Result<(f64, f64)> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::domain(format!("fresnel needs finite z >= 0, got {z}")));
    }
    if z == 0.0 {
        return Ok((0.0, 0.0));
    }
    if z < SERIES_LIMIT {
        Ok(series(z))
    } else {
        auxiliary(z)
    }
}

/// Interleaved power series: the k-th term is `z (πz²/2)^k / (k! (2k+1))`,
/// even k feeding C and odd k feeding S with alternating signs.
fn series(z: f64) -> (f64, f64) {
    let u = FRAC_PI_2 * z * z;
    let (mut c, mut s) = (0.0, 0.0);
    let mut t = z; // z u^k / k!
    for k in 0..MAX_ITER {
        let term = t / (2 * k + 1) as f64;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            c += sign * term;
        } else {
            s += sign * term;
        }
        if term < f64::EPSILON * 0.1 * c.abs().max(s.abs()) {
            break;
        }
        t *= u / (k + 1) as f64;
    }
    (c, s)
}

/// Large-argument form `C + iS = (1+i)/2 · [1 − e^{iπz²/2} (1−i) z h(z)]`,
/// where `h` is the continued fraction of the complementary error
/// function (modified Lentz). `f` and `g` are the real and imaginary parts
/// of the bracketed correction.
fn auxiliary(z: f64) -> Result<(f64, f64)> {
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, -PI * z * z);
    let mut cc = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    let mut n = -1.0f64;
    let mut converged = false;
    for _ in 2..=MAX_ITER {
        n += 2.0;
        let a = -n * (n + 1.0);
        b += 4.0;
        d = (a * d + b).inv();
        cc = b + a / cc;
        let del = cc * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() <= f64::EPSILON {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { what: "fresnel continued fraction", iterations: MAX_ITER });
    }
    h *= Complex64::new(z, -z);
    let phase = half_pi_z2(z);
    let cs = Complex64::new(0.5, 0.5) * (1.0 - Complex64::new(phase.cos(), phase.sin()) * h);
    Ok((cs.re, cs.im))
}

/// `πz²/2` reduced modulo 2π with the reduction done on `z²/4` first,
/// so large arguments keep their phase.
fn half_pi_z2(z: f64) -> f64 {
    // πz²/2 = 2π · (z²/4)
    let hi = z * z;
    let lo = z.mul_add(z, -hi);
    let quarter = hi / 4.0;
    let frac = quarter - quarter.floor();
    2.0 * PI * (frac + lo / 4.0)
}
