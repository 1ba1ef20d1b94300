//! Abel (partial) summation:
//! `Σ_{λ_n ≤ x} c_n f(λ_n) = C(x) f(x) − ∫_{λ₁}^x C(t) f′(t) dt`,
//! with `C(t) = Σ_{λ_n ≤ t} c_n`.

use std::f64::consts::{FRAC_PI_4, PI};

use super::CompensatedSum;
use crate::error::{Error, Result};
use crate::quad::integrate;

/// A continuously differentiable weight function.
pub trait SmoothFn {
    fn value(&self, t: f64) -> f64;
    fn derivative(&self, t: f64) -> f64;
}

/// Adapts a pair of closures.
pub struct FnPair<F, G>(pub F, pub G);

impl<F: Fn(f64) -> f64, G: Fn(f64) -> f64> SmoothFn for FnPair<F, G> {
    fn value(&self, t: f64) -> f64 {
        (self.0)(t)
    }
    fn derivative(&self, t: f64) -> f64 {
        (self.1)(t)
    }
}

/// `f(t) = cos(2πt√a + π/4)/t^{3/2}`, so that with `λ_n = √n` the sum
/// becomes `Σ cos(2π√(na) + π/4)/n^{3/4}`.
#[derive(Debug, Clone, Copy)]
pub struct CosineSqrtKernel {
    pub a: f64,
}

impl SmoothFn for CosineSqrtKernel {
    fn value(&self, t: f64) -> f64 {
        (2.0 * PI * t * self.a.sqrt() + FRAC_PI_4).cos() / t.powf(1.5)
    }

    fn derivative(&self, t: f64) -> f64 {
        let w = 2.0 * PI * self.a.sqrt();
        let (s, c) = (w * t + FRAC_PI_4).sin_cos();
        -w * s / t.powf(1.5) - 1.5 * c / t.powf(2.5)
    }
}

/// How the `∫ C f′` term is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbelIntegral {
    /// `C` is a step function, so each piece integrates to
    /// `C_j (f(λ_{j+1}) − f(λ_j))`.
    Telescoping,
    /// Each piece integrated numerically against `f′`.
    Quadrature,
}

fn validate(coeffs: &[f64], lambdas: &[f64], x: f64) -> Result<()> {
    if coeffs.len() != lambdas.len() {
        return Err(Error::domain("coeffs and lambdas differ in length"));
    }
    if lambdas.is_empty() {
        return Err(Error::domain("abel summation needs at least one point"));
    }
    if lambdas.iter().any(|l| !l.is_finite()) || !x.is_finite() {
        return Err(Error::domain("lambdas and x must be finite"));
    }
    if lambdas.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::domain("lambdas must be nondecreasing"));
    }
    if x < lambdas[0] {
        return Err(Error::domain(format!("x = {x} lies below λ₁ = {}", lambdas[0])));
    }
    Ok(())
}

/// `Σ_{λ_n ≤ x} c_n f(λ_n)`.
pub fn abel_direct(coeffs: &[f64], lambdas: &[f64], f: &impl SmoothFn, x: f64) -> Result<f64> {
    validate(coeffs, lambdas, x)?;
    let mut acc = CompensatedSum::default();
    for (&c, &l) in coeffs.iter().zip(lambdas).take_while(|(_, &l)| l <= x) {
        acc.add(c * f.value(l));
    }
    Ok(acc.value())
}

/// `C(x) f(x) − ∫_{λ₁}^x C(t) f′(t) dt`.
pub fn abel_summation(
    coeffs: &[f64],
    lambdas: &[f64],
    f: &impl SmoothFn,
    x: f64,
    mode: AbelIntegral,
) -> Result<f64> {
    validate(coeffs, lambdas, x)?;
    let active = lambdas.iter().take_while(|&&l| l <= x).count();
    let mut running = CompensatedSum::default();
    let mut integral = CompensatedSum::default();
    let mut f_left = f.value(lambdas[0]);
    for i in 0..active {
        running.add(coeffs[i]);
        let left = lambdas[i];
        let right = if i + 1 < active { lambdas[i + 1] } else { x };
        if right == left {
            continue;
        }
        let c = running.value();
        match mode {
            AbelIntegral::Telescoping => {
                let f_right = f.value(right);
                integral.add(c * f_right);
                integral.add(-c * f_left);
                f_left = f_right;
            }
            AbelIntegral::Quadrature => {
                let scale = (c * f.value(left)).abs().max(f64::MIN_POSITIVE);
                let q = integrate(|t| f.derivative(t), left, right, 1e-14 * scale.max(1e-300))?;
                integral.add(c * q.value);
            }
        }
    }
    Ok(running.value() * f.value(x) - integral.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_numbers() {
        let lambdas: Vec<f64> = (1..=100).map(|n| n as f64).collect();
        let coeffs = vec![1.0; 100];
        let f = FnPair(|t: f64| 1.0 / t, |t: f64| -1.0 / (t * t));
        let h100: f64 = (1..=100).map(|n| 1.0 / n as f64).sum();
        for mode in [AbelIntegral::Telescoping, AbelIntegral::Quadrature] {
            let v = abel_summation(&coeffs, &lambdas, &f, 100.5, mode).unwrap();
            assert!((v - h100).abs() <= 1e-10 * h100, "{mode:?}");
        }
    }

    #[test]
    fn endpoint_and_errors() {
        let f = FnPair(|t: f64| t * t, |t: f64| 2.0 * t);
        let l = [1.0, 2.0, 2.0, 5.0];
        let c = [3.0, 1.0, -2.0, 7.0];
        assert_eq!(abel_summation(&c, &l, &f, 1.0, AbelIntegral::Telescoping).unwrap(), 3.0);
        assert!(abel_summation(&c, &l, &f, 0.5, AbelIntegral::Telescoping).is_err());
        assert!(abel_summation(&c, &[1.0, 3.0, 2.0, 5.0], &f, 4.0, AbelIntegral::Telescoping).is_err());
        assert!(abel_summation(&c[..2], &l, &f, 4.0, AbelIntegral::Telescoping).is_err());
        // ties in λ are summed into the same jump of C
        let direct = abel_direct(&c, &l, &f, 4.0).unwrap();
        assert_eq!(direct, 3.0 + 4.0 - 8.0);
        let v = abel_summation(&c, &l, &f, 4.0, AbelIntegral::Telescoping).unwrap();
        assert!((v - direct).abs() < 1e-13);
    }

    #[test]
    fn cosine_sqrt_kernel_derivative() {
        let k = CosineSqrtKernel { a: 2.0 };
        let h = 1e-6;
        for t in [1.0, 3.3, 31.6] {
            let fd = (k.value(t + h) - k.value(t - h)) / (2.0 * h);
            assert!((fd - k.derivative(t)).abs() < 1e-6);
        }
    }
}
