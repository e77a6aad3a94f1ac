//! Little q-Jacobi recurrence data along `q = -e^ε, a = -e^{εα}, b = -e^{εβ}`.

use super::{recurrence_b, recurrence_u, ParamPair};
use crate::error::{Error, Result};
use crate::scalar::to_f64;

const SINGULAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QDeformation {
    epsilon: f64,
}

impl QDeformation {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return Err(Error::Domain(format!("epsilon must be positive, got {epsilon}")));
        }
        Ok(Self { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn q(&self) -> f64 {
        -self.epsilon.exp()
    }

    pub fn a(&self, alpha: f64) -> f64 {
        -(self.epsilon * alpha).exp()
    }

    pub fn b(&self, beta: f64) -> f64 {
        -(self.epsilon * beta).exp()
    }

    /// `1 - (-1)^parity e^{ε s}`, computed without cancellation.
    ///
    /// Every factor of the form `1 - a^i b^j q^k` reduces to this with
    /// `parity = i+j+k` and `s = iα + jβ + k`.
    fn one_minus(&self, parity: usize, s: f64) -> f64 {
        if parity % 2 == 0 {
            -(self.epsilon * s).exp_m1()
        } else {
            1.0 + (self.epsilon * s).exp()
        }
    }

    /// `q^n`
    fn q_pow(&self, n: usize) -> f64 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sign * (self.epsilon * n as f64).exp()
    }

    fn checked(&self, v: f64) -> Result<f64> {
        if v.abs() < SINGULAR_TOL {
            Err(Error::NearSingular(v))
        } else {
            Ok(v)
        }
    }

    /// `A_n = q^n (1-aq^{n+1})(1-abq^{n+1}) / ((1-abq^{2n+1})(1-abq^{2n+2}))`
    fn coeff_a(&self, alpha: f64, beta: f64, n: usize) -> Result<f64> {
        let nf = n as f64;
        let num = self.one_minus(n + 2, alpha + nf + 1.0) * self.one_minus(n + 3, alpha + beta + nf + 1.0);
        let den = self.checked(self.one_minus(2 * n + 3, alpha + beta + 2.0 * nf + 1.0))?
            * self.checked(self.one_minus(2 * n + 4, alpha + beta + 2.0 * nf + 2.0))?;
        Ok(self.q_pow(n) * num / den)
    }

    /// `C_n = a q^n (1-q^n)(1-bq^n) / ((1-abq^{2n+1})(1-abq^{2n}))`
    fn coeff_c(&self, alpha: f64, beta: f64, n: usize) -> Result<f64> {
        if n == 0 {
            // (1 - q^0) = 0 kills the numerator; the denominator may vanish too.
            return Ok(0.0);
        }
        let nf = n as f64;
        let num = self.one_minus(n, nf) * self.one_minus(n + 1, beta + nf);
        let den = self.checked(self.one_minus(2 * n + 3, alpha + beta + 2.0 * nf + 1.0))?
            * self.checked(self.one_minus(2 * n + 2, alpha + beta + 2.0 * nf))?;
        Ok(self.a(alpha) * self.q_pow(n) * num / den)
    }
}

/// `(u_n, b_n)` of little q-Jacobi at this deformation; `u_0` is `None`.
pub fn qjacobi_recurrence(d: &QDeformation, alpha: f64, beta: f64, n: usize) -> Result<(Option<f64>, f64)> {
    let b = d.coeff_a(alpha, beta, n)? + d.coeff_c(alpha, beta, n)?;
    let u = match n {
        0 => None,
        _ => Some(d.coeff_a(alpha, beta, n - 1)? * d.coeff_c(alpha, beta, n)?),
    };
    Ok((u, b))
}

/// Distance of the deformed recurrence data from the exact q = −1 values
/// at two deformations, and the ratio of the errors.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitProbe {
    pub n: usize,
    pub eps: (f64, f64),
    pub u_err: Option<(f64, f64)>,
    pub b_err: (f64, f64),
}

impl LimitProbe {
    pub fn u_ratio(&self) -> Option<f64> {
        self.u_err.map(|(c, f)| c / f)
    }

    pub fn b_ratio(&self) -> f64 {
        self.b_err.0 / self.b_err.1
    }
}

pub fn probe_limit(p: &ParamPair, n: usize, coarse: f64, fine: f64) -> Result<LimitProbe> {
    let (alpha, beta) = (to_f64(p.alpha()), to_f64(p.beta()));
    let u_exact = recurrence_u(p, n).map(|u| to_f64(&u));
    let b_exact = to_f64(&recurrence_b(p, n));
    let err = |eps: f64| -> Result<(Option<f64>, f64)> {
        let (u, b) = qjacobi_recurrence(&QDeformation::new(eps)?, alpha, beta, n)?;
        Ok((u.zip(u_exact).map(|(u, e)| (u - e).abs()), (b - b_exact).abs()))
    };
    let (uc, bc) = err(coarse)?;
    let (uf, bf) = err(fine)?;
    Ok(LimitProbe { n, eps: (coarse, fine), u_err: uc.zip(uf), b_err: (bc, bf) })
}
