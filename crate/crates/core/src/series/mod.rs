//! Truncated evaluation of the Voronoi-type series and their closed-form
//! approximants.
//!
//! Nothing here claims a limit. Every evaluator reports its partial value
//! together with the truncation parameters and, where one is cheap, the
//! size of the last included term.

mod abel;
mod closed_form;
mod euler_maclaurin;
mod partial;
mod trig;
mod voronoi;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{finite, Result};

pub use abel::{abel_direct, abel_summation, AbelIntegral, CosineSqrtKernel, FnPair, SmoothFn};
pub use closed_form::{
    expint_closed_form, f_eps_limit, fresnel_closed_form, fresnel_closed_form_bound, sqrt_closed_form,
    sqrt_closed_form_x2, IMAG_TOLERANCE,
};
pub use euler_maclaurin::{
    em_fourth_derivative_envelope, em_integral, em_integrand, em_integrand_derivative, euler_maclaurin,
    EmIntegrand,
};
pub use partial::{cos_power_partials, d_partial, g_partial, g_partial_dh, s_partial, s_partial_double_sum};
pub use trig::{m_n_s, p_q_s, trig_expansion, trig_expansion_terms, TrigExpansionTerms, TrigScale};
pub use voronoi::{voronoi_bessel_sum, voronoi_bessel_sum_rearranged, voronoi_partial, voronoi_running};

/// A truncated series value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesEval {
    pub value: f64,
    /// Outer truncation (N or M).
    pub outer_terms: u64,
    /// Inner truncation for doubly indexed sums.
    pub inner_terms: Option<u64>,
    /// Magnitude of the last included outer term, or a remainder bound
    /// where the evaluator documents one.
    pub tail_estimate: Option<f64>,
}

impl SeriesEval {
    pub(crate) fn new(
        value: f64,
        outer_terms: u64,
        inner_terms: Option<u64>,
        tail_estimate: Option<f64>,
        what: &'static str,
    ) -> Result<Self> {
        Ok(SeriesEval { value: finite(value, what)?, outer_terms, inner_terms, tail_estimate })
    }
}

/// A partial sum paired with a closed-form right-hand side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormReport {
    pub lhs_partial: f64,
    pub rhs_closed: f64,
    pub residual: f64,
    pub params: BTreeMap<String, f64>,
}

impl ClosedFormReport {
    pub(crate) fn new(lhs: f64, rhs: f64, params: &[(&str, f64)]) -> Result<Self> {
        let lhs = finite(lhs, "closed-form lhs")?;
        let rhs = finite(rhs, "closed-form rhs")?;
        Ok(ClosedFormReport {
            lhs_partial: lhs,
            rhs_closed: rhs,
            residual: lhs - rhs,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        })
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub(crate) fn check_positive(v: f64, name: &str) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(crate::error::Error::domain(format!("{name} must be a positive real, got {v}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::default();
        s.add(1e16);
        for _ in 0..1000 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_eq!(s.value(), 1000.0);
    }

    #[test]
    fn series_eval_rejects_nan() {
        assert!(SeriesEval::new(f64::NAN, 1, None, None, "t").is_err());
        assert!(SeriesEval::new(1.0, 1, None, None, "t").is_ok());
    }

    #[test]
    fn report_residual_recomputable() {
        let r = ClosedFormReport::new(1.25, 0.5, &[("a", 2.0)]).unwrap();
        assert_eq!(r.residual, r.lhs_partial - r.rhs_closed);
        assert_eq!(r.params["a"], 2.0);
    }
}
