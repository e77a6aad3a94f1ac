use statrs::function::gamma::ln_gamma;

use super::ParamPair;
use crate::error::{Error, Result};
use crate::quadrature::integrate;
use crate::scalar::to_f64;

/// `κ = Γ(α/2+β/2+1) / (Γ(β/2+1/2) Γ(α/2+1/2))`, making `c_0 = 1`.
pub fn weight_normalizer(p: &ParamPair) -> f64 {
    let (a, b) = (to_f64(p.alpha()), to_f64(p.beta()));
    (ln_gamma(0.5 * (a + b) + 1.0) - ln_gamma(0.5 * (b + 1.0)) - ln_gamma(0.5 * (a + 1.0))).exp()
}

/// `w(x) = κ |x|^α (1-x²)^{(β-1)/2} (1+x)` on `(-1, 1)`.
pub fn weight_eval(p: &ParamPair, x: f64) -> Result<f64> {
    let (a, b) = (to_f64(p.alpha()), to_f64(p.beta()));
    if !(x > -1.0 && x < 1.0) {
        return Err(Error::OutOfRange(x));
    }
    if x == 0.0 && a < 0.0 {
        return Err(Error::OutOfRange(x));
    }
    let one_minus_x2 = (1.0 - x) * (1.0 + x);
    Ok(weight_normalizer(p) * x.abs().powf(a) * one_minus_x2.powf(0.5 * (b - 1.0)) * (1.0 + x))
}

/// `∫_{-1}^{1} x^k w(x) dx` by adaptive quadrature.
///
/// Folding `x -> -x` onto `[0, 1]` leaves
/// `κ ∫_0^1 x^{k+α} (1-x²)^{(β-1)/2} [(1+x) + (-1)^k (1-x)] dx`.
/// The piece near 0 is integrated in `x = s²` and the piece near 1 in
/// `x = 1 - t²`, which tames both algebraic endpoint singularities.
pub fn moment_by_quadrature(p: &ParamPair, k: usize, abs_tol: f64) -> f64 {
    let (a, b) = (to_f64(p.alpha()), to_f64(p.beta()));
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let fold = |x: f64| (1.0 + x) + sign * (1.0 - x);
    let power = k as f64 + a;
    let split = std::f64::consts::FRAC_1_SQRT_2;

    // x = s², dx = 2s ds
    let near_zero = |s: f64| {
        let x = s * s;
        2.0 * s.powf(2.0 * power + 1.0) * (1.0 - x * x).powf(0.5 * (b - 1.0)) * fold(x)
    };
    // x = 1 - t², (1-x²)^{(β-1)/2} dx = 2 t^β (2-t²)^{(β-1)/2} dt
    let near_one = |t: f64| {
        let x = 1.0 - t * t;
        2.0 * x.powf(power) * t.powf(b) * (2.0 - t * t).powf(0.5 * (b - 1.0)) * fold(x)
    };

    let lower = integrate(near_zero, 0.0, split, 0.5 * abs_tol);
    let upper = integrate(near_one, 0.0, split, 0.5 * abs_tol);
    weight_normalizer(p) * (lower.value + upper.value)
}
