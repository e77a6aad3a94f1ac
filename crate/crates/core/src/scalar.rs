//! Scalar abstraction shared by the exact and floating-point layers.
//!
//! Everything polynomial in this crate is generic over [`Scalar`]: a field
//! with cheap small-integer embedding. The exact checks instantiate it with
//! [`Rational`]; `f64` and `f32` work for quick numerical experiments.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A field element usable as a polynomial coefficient.
pub trait Scalar: Clone + Debug + PartialEq + PartialOrd + Num + std::ops::Neg<Output = Self> {
    fn from_int(n: i64) -> Self;

    /// Lossy conversion used when exact values feed numerical code.
    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }

    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

/// `num/den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Parse `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| Error::Parse(s.to_string()))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| Error::Parse(s.to_string()))?;
        if d == BigInt::from(0) {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(Rational::new(n, d))
    } else {
        BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|_| Error::Parse(s.to_string()))
    }
}

/// `(-1)^n` as a small integer.
pub fn sign_pow(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64_lossy()
}

/// Exact rational for a dyadic `f64` (every finite double is one).
pub fn from_f64_exact(x: f64) -> Option<Rational> {
    Rational::from_f64(x)
}

/// True if `r` is an integer ≤ 0.
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}
