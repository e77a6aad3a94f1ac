use num_traits::{ToPrimitive, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::{is_nonpositive_integer, Rational, Scalar};

/// Rising factorial `x (x+1) ... (x+n-1)`, equal to 1 for `n = 0`.
pub fn pochhammer<T: Scalar>(x: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, k| acc * (x.clone() + T::from_int(k as i64)))
}

/// Expand a terminating `2F1(a, b; c; x^p)` into exact monomial coefficients.
///
/// `a_num` must be a nonpositive integer `-n`; the result has terms
/// `(a)_k (b)_k / ((c)_k k!) x^{k p}` for `k = 0..=n`.
pub fn terminating_2f1(a_num: &Rational, b: &Rational, c: &Rational, arg_power: usize) -> Result<Poly<Rational>> {
    if !is_nonpositive_integer(a_num) {
        return Err(Error::Domain(format!("2F1 numerator {a_num} is not a nonpositive integer")));
    }
    if arg_power == 0 {
        return Err(Error::Domain("2F1 argument power must be at least 1".into()));
    }
    let n = (-a_num)
        .to_integer()
        .to_usize()
        .ok_or_else(|| Error::Domain(format!("2F1 numerator {a_num} too large")))?;

    let mut coeffs = vec![Rational::zero(); n * arg_power + 1];
    let mut term = Rational::from_int(1);
    coeffs[0] = term.clone();
    for k in 0..n {
        let kk = Rational::from_int(k as i64);
        let den = (c + &kk) * Rational::from_int(k as i64 + 1);
        if den.is_zero() {
            return Err(Error::Domain(format!("2F1 denominator (c)_{} vanishes for c = {c}", k + 1)));
        }
        term = term * (a_num + &kk) * (b + &kk) / den;
        coeffs[(k + 1) * arg_power] = term.clone();
    }
    Ok(Poly::new(coeffs))
}
