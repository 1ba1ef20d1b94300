//! Adaptive Gauss–Kronrod (7/15) quadrature on a list of breakpoints.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the odd Kronrod nodes 1, 3, 5, 7.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_DEPTH: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kron += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<Quadrature> {
    let (value, error) = gk15(f, a, b);
    if error <= tol || (b - a).abs() <= f64::EPSILON * a.abs().max(b.abs()) {
        return Ok(Quadrature { value, error });
    }
    if depth >= MAX_DEPTH {
        return Err(Error::NoConvergence { what: "adaptive quadrature", iterations: depth as usize });
    }
    let m = 0.5 * (a + b);
    let l = adapt(f, a, m, 0.5 * tol, depth + 1)?;
    let r = adapt(f, m, b, 0.5 * tol, depth + 1)?;
    Ok(Quadrature { value: l.value + r.value, error: l.error + r.error })
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<Quadrature> {
    adapt(&f, a, b, tol, 0)
}

/// Integrates over consecutive intervals `[p₀, p₁], [p₁, p₂], …`,
/// sharing the tolerance in proportion to interval length.
pub fn integrate_pieces<F: Fn(f64) -> f64>(f: F, points: &[f64], tol: f64) -> Result<Quadrature> {
    let (Some(&first), Some(&last)) = (points.first(), points.last()) else {
        return Ok(Quadrature { value: 0.0, error: 0.0 });
    };
    let span = (last - first).abs().max(f64::MIN_POSITIVE);
    let mut total = Quadrature { value: 0.0, error: 0.0 };
    let mut comp = 0.0;
    for w in points.windows(2) {
        let piece_tol = (tol * (w[1] - w[0]).abs() / span).max(tol * 1e-6);
        let q = adapt(&f, w[0], w[1], piece_tol, 0)?;
        // Neumaier summation across many periods.
        let t = total.value + q.value;
        if total.value.abs() >= q.value.abs() {
            comp += (total.value - t) + q.value;
        } else {
            comp += (q.value - t) + total.value;
        }
        total.value = t;
        total.error += q.error;
    }
    total.value += comp;
    Ok(total)
}
