//! Non-polynomial eigenfunctions of `L_0`: the even/odd split `F = f + g`,
//! the hypergeometric general solution, the elementary cases and residual
//! checks of the equations it must satisfy.

mod series;

pub use series::{hyp2f1_series, PowerSeries, MAX_TERMS, REFERENCE_Z, TRUNCATION_REL};

use num_complex::Complex;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::littlejacobi::{explicit_poly, ParamPair};
use crate::numcore::Poly;
use crate::scalar::{int, to_f64, Rational};
use series::cast;

fn params<T: Float>(p: &ParamPair) -> (T, T) {
    (cast(to_f64(p.alpha())), cast(to_f64(p.beta())))
}

/// `λ = 2(β+1)`, where the elimination of `g` breaks down.
pub fn elementary_lambda<T: Float>(p: &ParamPair) -> T {
    let (_, beta) = params::<T>(p);
    cast::<T>(2.0) * (beta + T::one())
}

fn is_elementary<T: Float>(p: &ParamPair, lambda: T) -> bool {
    let target = elementary_lambda::<T>(p);
    (lambda - target).abs() <= cast::<T>(8.0) * T::epsilon() * target.abs().max(T::one())
}

fn check_open_interval<T: Float>(x: T) -> Result<()> {
    if x.abs() < T::one() {
        Ok(())
    } else {
        Err(Error::OutOfRange(x.to_f64().unwrap_or(f64::NAN)))
    }
}

/// Series data of `F = f + g` with `C(λ) = 1`:
/// `f(x) = Σ f_k x^{2k}`, `g(x) = x Σ g_k x^{2k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSolution<T> {
    pub lambda: T,
    pub c_coeff: T,
    pub alpha: T,
    pub beta: T,
    f_series: PowerSeries<T>,
    g_series: PowerSeries<T>,
}

impl<T: Float> EigenSolution<T> {
    /// ```text
    /// f = C 2F1(λ/4, (α+β)/2+1-λ/4; (α+1)/2; x²)
    /// g = -λC/(2(α+1)) x 2F1(1+λ/4, (α+β)/2+1-λ/4; (α+3)/2; x²)
    /// ```
    pub fn new(p: &ParamPair, lambda: T) -> Result<Self> {
        if is_elementary(p, lambda) {
            return Err(Error::Domain(format!(
                "lambda = 2(beta+1) is the elementary case, got {}",
                lambda.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let (alpha, beta) = params::<T>(p);
        let (one, two, four) = (T::one(), cast::<T>(2.0), cast::<T>(4.0));
        let quarter = lambda / four;
        let upper = (alpha + beta) / two + one - quarter;
        let f_series = hyp2f1_series(quarter, upper, (alpha + one) / two);
        let g_series = hyp2f1_series(one + quarter, upper, (alpha + cast(3.0)) / two)
            .scaled(-lambda / (two * (alpha + one)));
        Ok(Self { lambda, c_coeff: one, alpha, beta, f_series, g_series })
    }

    pub fn f_series_coeffs(&self) -> &[T] {
        self.f_series.coeffs()
    }

    pub fn g_series_coeffs(&self) -> &[T] {
        self.g_series.coeffs()
    }

    /// Number of retained terms in the longer of the two series.
    pub fn trunc_terms(&self) -> usize {
        self.f_series.len().max(self.g_series.len())
    }

    pub fn f(&self, x: T) -> T {
        self.f_series.eval(x * x)
    }

    pub fn f_prime(&self, x: T) -> T {
        cast::<T>(2.0) * x * self.f_series.eval_d1(x * x)
    }

    pub fn f_second(&self, x: T) -> T {
        let z = x * x;
        cast::<T>(2.0) * self.f_series.eval_d1(z) + cast::<T>(4.0) * z * self.f_series.eval_d2(z)
    }

    pub fn g(&self, x: T) -> T {
        x * self.g_series.eval(x * x)
    }

    /// `g(x)/x`, finite at the origin.
    pub fn g_over_x(&self, x: T) -> T {
        self.g_series.eval(x * x)
    }

    pub fn g_prime(&self, x: T) -> T {
        let z = x * x;
        self.g_series.eval(z) + cast::<T>(2.0) * z * self.g_series.eval_d1(z)
    }

    pub fn big_f(&self, x: T) -> T {
        self.f(x) + self.g(x)
    }

    /// Residuals of the first-order system
    ///
    /// ```text
    /// f' + x g' + (1+α+β) g - λ g / 2 = 0
    /// x f' + g' + α g / x + λ f / 2   = 0
    /// ```
    pub fn parity_residuals(&self, x: T) -> (T, T) {
        let two = cast::<T>(2.0);
        let (f, f1, g, g1) = (self.f(x), self.f_prime(x), self.g(x), self.g_prime(x));
        let r1 = f1 + x * g1 + (T::one() + self.alpha + self.beta) * g - self.lambda * g / two;
        let r2 = x * f1 + g1 + self.alpha * self.g_over_x(x) + self.lambda * f / two;
        (r1, r2)
    }

    /// `L_0 F` rebuilt from the parts:
    /// `2(1-x)(f' - g') + 2(α+β+1) g - 2α g/x`.
    pub fn l0_applied(&self, x: T) -> T {
        let two = cast::<T>(2.0);
        two * (T::one() - x) * (self.f_prime(x) - self.g_prime(x))
            + two * (self.alpha + self.beta + T::one()) * self.g(x)
            - two * self.alpha * self.g_over_x(x)
    }

    /// `|L_0 F - λ F|` at `x`.
    pub fn eigen_residual(&self, x: T) -> T {
        (self.l0_applied(x) - self.lambda * self.big_f(x)).abs()
    }

    /// Residual of the second-order equation for `f` at `x`.
    pub fn ode_residual(&self, x: T) -> T {
        ode_lhs(self.alpha, self.beta, self.lambda, x, self.f(x), self.f_prime(x), self.f_second(x)).abs()
    }
}

/// `4x(x²-1) f'' + 4((α+β+3)x² - α) f' + λ x (2(α+β) + 4 - λ) f`
pub fn ode_lhs<T: Float>(alpha: T, beta: T, lambda: T, x: T, f: T, f1: T, f2: T) -> T {
    let four = cast::<T>(4.0);
    let x2 = x * x;
    four * x * (x2 - T::one()) * f2
        + four * ((alpha + beta + cast(3.0)) * x2 - alpha) * f1
        + lambda * x * (cast::<T>(2.0) * (alpha + beta) + four - lambda) * f
}

/// `(F, f, g)` of the general solution at `x`, `C(λ) = 1`.
pub fn solve_general<T: Float>(p: &ParamPair, lambda: T, x: T) -> Result<(T, T, T)> {
    check_open_interval(x)?;
    let sol = EigenSolution::new(p, lambda)?;
    Ok((sol.big_f(x), sol.f(x), sol.g(x)))
}

/// `g = (2(x²-1) f' + λ x f) / (2(β+1) - λ)`.
pub fn g_from_f<T: Float>(p: &ParamPair, lambda: T, f: T, f_prime: T, x: T) -> Result<T> {
    if is_elementary(p, lambda) {
        return Err(Error::Domain("g cannot be eliminated at lambda = 2(beta+1)".into()));
    }
    let two = cast::<T>(2.0);
    Ok((two * (x * x - T::one()) * f_prime + lambda * x * f) / (elementary_lambda::<T>(p) - lambda))
}

/// `f = (1-x²)^{-(β+1)/2}`, the solution at `λ = 2(β+1)` with `C = 1`.
pub fn elementary_case<T: Float>(p: &ParamPair, x: T) -> Result<T> {
    check_open_interval(x)?;
    let (_, beta) = params::<T>(p);
    Ok((T::one() - x * x).powf(-(beta + T::one()) / cast(2.0)))
}

/// `(f, f', f'')` of the elementary solution.
pub fn elementary_derivatives<T: Float>(p: &ParamPair, x: T) -> Result<(T, T, T)> {
    let f = elementary_case(p, x)?;
    let (_, beta) = params::<T>(p);
    let k = beta + T::one();
    let w = T::one() - x * x;
    let f1 = k * x * f / w;
    let f2 = k * (f / w + x * f1 / w + cast::<T>(2.0) * x * x * f / (w * w));
    Ok((f, f1, f2))
}

/// The odd part at `λ = 2(β-1)`:
/// `g = -(β-1)/(α+1) x (1-x²)^{-(β+1)/2}`.
pub fn elementary_g<T: Float>(p: &ParamPair, x: T) -> Result<T> {
    let (alpha, beta) = params::<T>(p);
    Ok(-(beta - T::one()) / (alpha + T::one()) * x * elementary_case(p, x)?)
}

/// `|ODE residual|` of `f` at `x`. Uses the closed form at `λ = 2(β+1)`
/// and the series otherwise.
pub fn ode_residual<T: Float>(p: &ParamPair, lambda: T, x: T) -> Result<T> {
    check_open_interval(x)?;
    let (alpha, beta) = params::<T>(p);
    if is_elementary(p, lambda) {
        let (f, f1, f2) = elementary_derivatives(p, x)?;
        return Ok(ode_lhs(alpha, beta, lambda, x, f, f1, f2).abs());
    }
    Ok(EigenSolution::new(p, lambda)?.ode_residual(x))
}

/// The rejected branch `x^{1-α} 2F1((λ+2-2α)/4, (2β+6-λ)/4; (3-α)/2; x²)`.
///
/// For non-integer `α` the power is complex on `x < 0`, so this branch is
/// never even. Evaluated with the principal power.
pub fn second_branch(p: &ParamPair, lambda: f64, x: f64) -> Result<Complex<f64>> {
    check_open_interval(x)?;
    let (alpha, beta) = params::<f64>(p);
    let h = hyp2f1_series((lambda + 2.0 - 2.0 * alpha) / 4.0, (2.0 * beta + 6.0 - lambda) / 4.0, (3.0 - alpha) / 2.0);
    Ok(Complex::new(x, 0.0).powf(1.0 - alpha) * h.eval(x * x))
}

/// ODE residual of the second branch at `x > 0`.
pub fn second_branch_residual(p: &ParamPair, lambda: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::OutOfRange(x));
    }
    let (alpha, beta) = params::<f64>(p);
    let h = hyp2f1_series((lambda + 2.0 - 2.0 * alpha) / 4.0, (2.0 * beta + 6.0 - lambda) / 4.0, (3.0 - alpha) / 2.0);
    let z = x * x;
    let s = 1.0 - alpha;
    let (h0, h1, h2) = (h.eval(z), h.eval_d1(z), h.eval_d2(z));
    let f = x.powf(s) * h0;
    let f1 = s * x.powf(s - 1.0) * h0 + 2.0 * x.powf(s + 1.0) * h1;
    let f2 = s * (s - 1.0) * x.powf(s - 2.0) * h0 + 2.0 * (2.0 * s + 1.0) * x.powf(s) * h1 + 4.0 * x.powf(s + 2.0) * h2;
    Ok(ode_lhs(alpha, beta, lambda, x, f, f1, f2).abs())
}

/// Where `λ` sits relative to the two polynomial lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumClass {
    /// `λ = -4n`, polynomial of degree `2n`.
    Even { degree: usize },
    /// `λ = 2(α+β+2+2n)`, polynomial of degree `2n+1`.
    Odd { degree: usize },
    NonPolynomial,
}

impl SpectrumClass {
    pub fn degree(self) -> Option<usize> {
        match self {
            Self::Even { degree } | Self::Odd { degree } => Some(degree),
            Self::NonPolynomial => None,
        }
    }
}

fn as_index(r: &Rational) -> Option<usize> {
    use num_traits::{Signed, ToPrimitive};
    (r.is_integer() && !r.is_negative()).then(|| r.to_integer().to_usize()).flatten()
}

pub fn classify_lambda(p: &ParamPair, lambda: &Rational) -> SpectrumClass {
    if let Some(n) = as_index(&(-lambda / int(4))) {
        return SpectrumClass::Even { degree: 2 * n };
    }
    if let Some(n) = as_index(&((lambda / int(2) - p.alpha() - p.beta() - int(2)) / int(2))) {
        return SpectrumClass::Odd { degree: 2 * n + 1 };
    }
    SpectrumClass::NonPolynomial
}

/// Exact `F = f + g` (with `C = 1`) when both series terminate.
pub fn polynomial_eigenfunction(p: &ParamPair, lambda: &Rational) -> Result<Option<Poly<Rational>>> {
    use crate::numcore::terminating_2f1;
    let class = classify_lambda(p, lambda);
    let (a, b) = (p.alpha(), p.beta());
    let quarter = lambda / int(4);
    let upper = (a + b) / int(2) + int(1) - &quarter;
    let c_even = (a + int(1)) / int(2);
    let c_odd = (a + int(3)) / int(2);
    let coupling = -lambda / (int(2) * (a + int(1)));
    let (f, g) = match class {
        SpectrumClass::NonPolynomial => return Ok(None),
        SpectrumClass::Even { .. } => {
            let f = terminating_2f1(&quarter, &upper, &c_even, 2)?;
            let shifted = &quarter + int(1);
            let g = if coupling.is_zero() { Poly::zero() } else { terminating_2f1(&shifted, &upper, &c_odd, 2)? };
            (f, g)
        }
        SpectrumClass::Odd { .. } => {
            let f = terminating_2f1(&upper, &quarter, &c_even, 2)?;
            let g = terminating_2f1(&upper, &(&quarter + int(1)), &c_odd, 2)?;
            (f, g)
        }
    };
    Ok(Some(&f + &g.shift_up(1).scale(&coupling)))
}

/// Classify `λ` and, on a lattice point, confirm that the terminating
/// general solution is a multiple of `P_n`.
pub fn polynomial_spectrum_detect(p: &ParamPair, lambda: &Rational) -> Result<SpectrumClass> {
    let class = classify_lambda(p, lambda);
    let (Some(degree), Some(poly)) = (class.degree(), polynomial_eigenfunction(p, lambda)?) else {
        return Ok(class);
    };
    let monic = poly
        .monic()
        .ok_or_else(|| Error::Consistency("terminating solution vanished".into()))?;
    if poly.degree().finite() != Some(degree) || monic != explicit_poly(p, degree)? {
        return Err(Error::Consistency(format!("terminating solution at lambda = {lambda} is not a multiple of P_{degree}")));
    }
    Ok(class)
}

/// `λ` for the even lattice (`-4n`) or the odd lattice (`2(α+β+2+2n)`).
pub fn lattice_lambda(p: &ParamPair, degree: usize) -> Rational {
    let n = int((degree / 2) as i64);
    if degree % 2 == 0 {
        -int(4) * n
    } else {
        int(2) * (p.alpha() + p.beta() + int(2) + int(2) * n)
    }
}

/// Exact eigenvalue check used by tests: `lattice_lambda` agrees with the
/// eigenvalue of `L_0` on `P_n`.
pub fn lattice_matches_eigenvalue(p: &ParamPair, degree: usize) -> bool {
    lattice_lambda(p, degree) == crate::littlejacobi::eigenvalue(p, degree)
}
