//! The concrete operators of the little −1 Jacobi calculus, each given by
//! its closed-form action on monomials.

use super::banded::BandedOp;
use crate::error::{Error, Result};
use crate::numcore::{pochhammer, Poly};
use crate::scalar::{sign_pow, Scalar};

fn int<T: Scalar>(n: usize) -> T {
    T::from_int(n as i64)
}

/// `1 - (-1)^n`: 0 for even `n`, 2 for odd.
fn odd_indicator<T: Scalar>(n: usize) -> T {
    T::from_int(1 - sign_pow(n))
}

/// Dunkl bracket `[n]_μ = n + (1 - (-1)^n) μ`.
pub fn dunkl_bracket<T: Scalar>(n: usize, mu: &T) -> T {
    int::<T>(n) + odd_indicator::<T>(n) * mu.clone()
}

/// Dunkl operator `T_μ f = f' + μ (f(x) - f(-x)) / x`.
pub fn make_dunkl<T: Scalar>(mu: &T, trunc_degree: usize) -> BandedOp<T> {
    BandedOp::from_fn(trunc_degree, 0, |n| match n {
        0 => Poly::zero(),
        _ => Poly::monomial(n - 1, dunkl_bracket(n, mu)),
    })
}

/// Diagonal coefficient of `L_0` on `x^n`.
pub fn l0_diagonal<T: Scalar>(alpha: &T, beta: &T, n: usize) -> T {
    T::from_int(-2 * sign_pow(n) * n as i64) + odd_indicator::<T>(n) * (alpha.clone() + beta.clone() + T::one())
}

/// Subdiagonal coefficient of `L_0` on `x^n` (multiplies `x^{n-1}`).
pub fn l0_subdiagonal<T: Scalar>(alpha: &T, n: usize) -> T {
    T::from_int(2 * sign_pow(n) * n as i64) - odd_indicator::<T>(n) * alpha.clone()
}

/// `L_0 = 2(1-x) ∂ R + (α+β+1 - α/x)(1 - R)`, acting as
/// `x^n -> ξ_n x^n + η_n x^{n-1}`.
pub fn make_l0<T: Scalar>(alpha: &T, beta: &T, trunc_degree: usize) -> BandedOp<T> {
    BandedOp::from_fn(trunc_degree, 0, |n| {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = l0_diagonal(alpha, beta, n);
        if n > 0 {
            coeffs[n - 1] = l0_subdiagonal(alpha, n);
        }
        Poly::new(coeffs)
    })
}

/// Raising operator
/// `Θ f = (x²-1) f' + α(x-1)²/(2x) f(-x) + ((β+α/2)x - 1 - α/(2x)) f`.
///
/// The `1/x` pieces cancel on every monomial, leaving a three-term band.
pub fn make_theta<T: Scalar>(alpha: &T, beta: &T, trunc_degree: usize) -> BandedOp<T> {
    let half_alpha = alpha.clone() / T::from_int(2);
    BandedOp::from_fn(trunc_degree, 1, |n| {
        let s = T::from_int(sign_pow(n));
        let mut coeffs = vec![T::zero(); n + 2];
        coeffs[n + 1] = int::<T>(n) + beta.clone() + half_alpha.clone() + s.clone() * half_alpha.clone();
        coeffs[n] = -T::one() - s.clone() * alpha.clone();
        if n > 0 {
            coeffs[n - 1] = -int::<T>(n) - half_alpha.clone() + s * half_alpha.clone();
        }
        Poly::new(coeffs)
    })
}

/// `S_0 = (1-x²) ∂² + (1 - (2a+3)x) ∂`, the Jacobi operator for parameters `(a, a+1)`.
pub fn make_s0<T: Scalar>(a: &T, trunc_degree: usize) -> BandedOp<T> {
    BandedOp::from_fn(trunc_degree, 0, |n| {
        let mut coeffs = vec![T::zero(); n + 1];
        let nn = int::<T>(n);
        coeffs[n] = -(nn.clone() * (nn.clone() + T::from_int(2) * a.clone() + T::from_int(2)));
        if n >= 1 {
            coeffs[n - 1] = nn.clone();
        }
        if n >= 2 {
            coeffs[n - 2] = nn * int::<T>(n - 1);
        }
        Poly::new(coeffs)
    })
}

/// Eigenvalue `σ_n` of the intertwiner on `x^n`:
/// `σ_{2m-1} = σ_{2m} = (1/2)_m / (μ+1/2)_m`.
pub fn intertwiner_sigma<T: Scalar>(mu: &T, n: usize) -> T {
    let half = T::one() / T::from_int(2);
    let m = n.div_ceil(2);
    pochhammer(&half, m) / pochhammer(&(mu.clone() + half), m)
}

/// Dunkl intertwining operator `V_μ`, diagonal on monomials.
pub fn make_intertwiner<T: Scalar>(mu: &T, trunc_degree: usize) -> Result<BandedOp<T>> {
    let half = T::one() / T::from_int(2);
    if *mu <= -half {
        return Err(Error::Domain(format!("intertwiner needs mu > -1/2, got {mu:?}")));
    }
    Ok(BandedOp::from_fn(trunc_degree, 0, |n| Poly::monomial(n, intertwiner_sigma(mu, n))))
}
