//! The little −1 Jacobi family: recurrence data, eigenvalues, moments, the
//! monic polynomials (by recurrence and by explicit `2F1` forms), the
//! weight function and the q → −1 limit of little q-Jacobi.

mod moments;
mod qlimit;
mod weight;

pub use moments::{exact_determinant, moments, MomentFunctional};
pub use qlimit::{probe_limit, qjacobi_recurrence, LimitProbe, QDeformation};
pub use weight::{moment_by_quadrature, weight_eval, weight_normalizer};

use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numcore::{terminating_2f1, Poly};
use crate::scalar::{int, sign_pow, Rational};

/// Family parameters `(α, β)`, both `> -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ParamPair {
    #[serde(serialize_with = "ser_rational")]
    alpha: Rational,
    #[serde(serialize_with = "ser_rational")]
    beta: Rational,
}

pub(crate) fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl ParamPair {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        let minus_one = -Rational::one();
        if alpha <= minus_one {
            return Err(Error::Domain(format!("alpha must be > -1, got {alpha}")));
        }
        if beta <= minus_one {
            return Err(Error::Domain(format!("beta must be > -1, got {beta}")));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Same `α`, `β` shifted by `delta`.
    pub fn with_beta_shift(&self, delta: i64) -> Result<Self> {
        Self::new(self.alpha.clone(), &self.beta + int(delta))
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={}, beta={}", self.alpha, self.beta)
    }
}

/// Recurrence data at index `n`: `x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoeffs {
    /// Only defined for `n ≥ 1`.
    pub u: Option<Rational>,
    pub b: Rational,
}

pub fn recurrence_u(p: &ParamPair, n: usize) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    let (a, b) = (&p.alpha, &p.beta);
    let nn = int(n as i64);
    let (left, right) = if n % 2 == 0 { (nn.clone(), &nn + b + a) } else { (&nn + a, &nn + b) };
    let den = &nn * int(2) + a + b;
    Some(left * right / (&den * &den))
}

pub fn recurrence_b(p: &ParamPair, n: usize) -> Rational {
    let (a, b) = (&p.alpha, &p.beta);
    if n == 0 {
        // The displayed formula reduces to (α+1)/(α+β+2) after cancelling α+β,
        // which also covers the removable 0/0 at α+β = 0.
        return (a + int(1)) / (a + b + int(2));
    }
    let s = int(sign_pow(n));
    let two_n = int(2 * n as i64);
    let num = (&two_n + int(1)) * a + a * b + a * a + &s * b;
    let den = (&two_n + a + b) * (&two_n + int(2) + a + b);
    s * num / den
}

pub fn recurrence_coeffs(p: &ParamPair, n: usize) -> RecurrenceCoeffs {
    RecurrenceCoeffs { u: recurrence_u(p, n), b: recurrence_b(p, n) }
}

/// Eigenvalue of `L_0` on `P_n`: `-2n` for even `n`, `2(α+β+n+1)` for odd `n`.
pub fn eigenvalue(p: &ParamPair, n: usize) -> Rational {
    let nn = int(n as i64);
    if n % 2 == 0 {
        -int(2) * nn
    } else {
        int(2) * (&p.alpha + &p.beta + nn + int(1))
    }
}

/// Monic `P_0, ..., P_n` from the three-term recurrence.
pub fn generate_family(p: &ParamPair, n: usize) -> Vec<Poly<Rational>> {
    let mut family = Vec::with_capacity(n + 1);
    family.push(Poly::one());
    for k in 0..n {
        let shifted = &Poly::x() - &Poly::constant(recurrence_b(p, k));
        let mut next = &shifted * &family[k];
        if let Some(u) = recurrence_u(p, k) {
            next = &next - &family[k - 1].scale(&u);
        }
        family.push(next);
    }
    family
}

/// Monic `P_n` from the three-term recurrence.
pub fn generate_monic(p: &ParamPair, n: usize) -> Poly<Rational> {
    generate_family(p, n).pop().expect("family is nonempty")
}

/// The unnormalized bracket of the explicit `2F1` representation of `P_n`.
pub fn explicit_bracket(p: &ParamPair, n: usize) -> Result<Poly<Rational>> {
    let (a, b) = (&p.alpha, &p.beta);
    let nn = int(n as i64);
    let half = |r: Rational| r / int(2);
    let c_even = half(a + int(1));
    let c_odd = half(a + int(3));
    let m = int((n / 2) as i64);

    let (first, coupling, second) = if n % 2 == 0 {
        let upper = half(&nn + a + b + int(2));
        let first = terminating_2f1(&-&m, &upper, &c_even, 2)?;
        if n == 0 {
            return Ok(first);
        }
        let second = terminating_2f1(&(int(1) - &m), &upper, &c_odd, 2)?;
        (first, &nn / (a + int(1)), second)
    } else {
        let first = terminating_2f1(&-&m, &half(&nn + a + b + int(1)), &c_even, 2)?;
        let second = terminating_2f1(&-&m, &half(&nn + a + b + int(3)), &c_odd, 2)?;
        (first, -(a + b + &nn + int(1)) / (a + int(1)), second)
    };
    Ok(&first + &second.shift_up(1).scale(&coupling))
}

/// Monic `P_n` from the explicit even/odd `2F1` combinations.
pub fn explicit_poly(p: &ParamPair, n: usize) -> Result<Poly<Rational>> {
    let bracket = explicit_bracket(p, n)?;
    if bracket.degree().finite() != Some(n) {
        return Err(Error::Consistency(format!("explicit form for n = {n} has degree {}", bracket.degree())));
    }
    bracket
        .monic()
        .ok_or_else(|| Error::Consistency("explicit form vanished".into()))
}

/// Product `u_1 u_2 ... u_n`, the squared norm of monic `P_n`.
pub fn norm_squared(p: &ParamPair, n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * recurrence_u(p, k).expect("k ≥ 1"))
}
