//! The `α = 0` Schrödinger picture: the trigonometric well
//! `U(y) = (a+1/2)(a+1/2 - sin y)/cos² y` on `(-π/2, π/2)`, its closed-form
//! eigenfunctions, the reflection operator `L_1` with `L_1² = H_1`, and the
//! factorization conditions behind it.
//!
//! `H_1` and `U` carry no additive constant; where the shifted potential
//! `U - (a+1)²` matters the shift is applied explicitly.

use std::f64::consts::FRAC_PI_2;

use num_traits::One;

use crate::error::{Error, Result};
use crate::littlejacobi::{generate_monic, ParamPair};
use crate::numcore::{terminating_2f1, Poly};
use crate::opcalc::make_s0;
use crate::scalar::{int, rat, sign_pow, to_f64, Rational};

/// Default distance kept from the walls at `±π/2`.
pub const GRID_MARGIN: f64 = 1e-3;

/// Well parameter `a > 1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchrodingerParams {
    a: Rational,
}

impl SchrodingerParams {
    pub fn new(a: Rational) -> Result<Self> {
        if a <= rat(1, 2) {
            return Err(Error::Domain(format!("a must be > 1/2, got {a}")));
        }
        Ok(Self { a })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    fn af(&self) -> f64 {
        to_f64(&self.a)
    }

    /// `c = a + 1/2`
    fn c(&self) -> f64 {
        self.af() + 0.5
    }

    /// The little −1 Jacobi parameters `(α, β) = (0, 2a+1)` of this well.
    pub fn little_params(&self) -> ParamPair {
        ParamPair::new(int(0), int(2) * &self.a + int(1)).expect("a > 1/2 keeps beta > -1")
    }
}

fn check_domain(y: f64) -> Result<()> {
    if y.abs() < FRAC_PI_2 {
        Ok(())
    } else {
        Err(Error::OutOfRange(y))
    }
}

/// A function of `y` with analytic first derivative.
pub trait Smooth {
    fn value(&self, y: f64) -> f64;
    fn d1(&self, y: f64) -> f64;
}

/// A function of `y` with analytic first and second derivatives.
pub trait Smooth2: Smooth {
    fn d2(&self, y: f64) -> f64;
}

/// A [`Smooth`] built from closures.
pub struct FnSmooth<F, D> {
    pub f: F,
    pub df: D,
}

impl<F: Fn(f64) -> f64, D: Fn(f64) -> f64> Smooth for FnSmooth<F, D> {
    fn value(&self, y: f64) -> f64 {
        (self.f)(y)
    }

    fn d1(&self, y: f64) -> f64 {
        (self.df)(y)
    }
}

/// `U(y) = (a+1/2)(a+1/2 - sin y) / cos² y`
pub fn potential(sp: &SchrodingerParams, y: f64) -> Result<f64> {
    check_domain(y)?;
    let c = sp.c();
    let cos = y.cos();
    Ok(c * (c - y.sin()) / (cos * cos))
}

/// `E_n = (a+n+1)²`
pub fn energy(sp: &SchrodingerParams, n: usize) -> f64 {
    let root = sp.af() + n as f64 + 1.0;
    root * root
}

/// Eigenvalue of `L_1` on `ψ_n`: `(-1)^{n+1}(a+n+1)`.
pub fn l1_eigenvalue(sp: &SchrodingerParams, n: usize) -> f64 {
    -(sign_pow(n) as f64) * (sp.af() + n as f64 + 1.0)
}

/// `ψ_0 = Φ = sqrt(1+sin y) cos^{a+1/2} y` times a polynomial in `sin y`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiPoly {
    c: f64,
    poly: Poly<f64>,
}

impl PhiPoly {
    pub fn new(sp: &SchrodingerParams, poly: &Poly<Rational>) -> Self {
        Self { c: sp.c(), poly: poly.to_f64() }
    }

    fn phi(&self, y: f64) -> f64 {
        (1.0 + y.sin()).sqrt() * y.cos().powf(self.c)
    }

    /// `Φ'/Φ = ((1 - s)/2 - c s) / cos y`
    fn log_d1(&self, y: f64) -> f64 {
        let s = y.sin();
        (0.5 * (1.0 - s) - self.c * s) / y.cos()
    }

    /// `(Φ'/Φ)' = (s/2 - 1/2 - c) / cos² y`
    fn log_d2(&self, y: f64) -> f64 {
        let cos = y.cos();
        (0.5 * y.sin() - 0.5 - self.c) / (cos * cos)
    }

    /// `(p, dp/dy, d²p/dy²)` for `p(sin y)`.
    fn poly_parts(&self, y: f64) -> (f64, f64, f64) {
        let (s, cos) = (y.sin(), y.cos());
        let d = self.poly.derivative();
        let dd = d.derivative();
        let (p0, p1, p2) = (self.poly.eval(&s), d.eval(&s), dd.eval(&s));
        (p0, p1 * cos, p2 * cos * cos - p1 * s)
    }
}

impl Smooth for PhiPoly {
    fn value(&self, y: f64) -> f64 {
        self.phi(y) * self.poly.eval(&y.sin())
    }

    fn d1(&self, y: f64) -> f64 {
        let (u, u1, _) = self.poly_parts(y);
        self.phi(y) * (self.log_d1(y) * u + u1)
    }
}

impl Smooth2 for PhiPoly {
    fn d2(&self, y: f64) -> f64 {
        let (u, u1, u2) = self.poly_parts(y);
        let l1 = self.log_d1(y);
        let phi2_over_phi = self.log_d2(y) + l1 * l1;
        self.phi(y) * (phi2_over_phi * u + 2.0 * l1 * u1 + u2)
    }
}

/// `2F1(-n, n+2a+2; a+1; (1-s)/2)` as an exact polynomial in `s`.
pub fn wave_polynomial(sp: &SchrodingerParams, n: usize) -> Poly<Rational> {
    let a = sp.a();
    terminating_2f1(&int(-(n as i64)), &(int(n as i64) + int(2) * a + int(2)), &(a + int(1)), 1)
        .expect("a + 1 > 0 keeps the series finite")
        .compose_affine(&rat(-1, 2), &rat(1, 2))
}

/// `ψ_n` as a [`PhiPoly`].
pub fn eigenfunction(sp: &SchrodingerParams, n: usize) -> PhiPoly {
    PhiPoly::new(sp, &wave_polynomial(sp, n))
}

pub fn wavefunction(sp: &SchrodingerParams, n: usize, y: f64) -> Result<f64> {
    check_domain(y)?;
    Ok(eigenfunction(sp, n).value(y))
}

/// `L_1 f(y) = -f'(-y) - (a+1/2) f(-y) / cos y`
pub fn apply_l1(sp: &SchrodingerParams, f: &impl Smooth, y: f64) -> Result<f64> {
    check_domain(y)?;
    Ok(-f.d1(-y) - sp.c() * f.value(-y) / y.cos())
}

/// `H_1 f(y) = -f''(y) + U(y) f(y)`
pub fn apply_h1(sp: &SchrodingerParams, f: &impl Smooth2, y: f64) -> Result<f64> {
    Ok(-f.d2(y) + potential(sp, y)? * f.value(y))
}

/// `L_1 f` as a function with analytic derivative, so `L_1` can be applied
/// twice.
pub struct L1Applied<'a, F> {
    c: f64,
    inner: &'a F,
}

impl<'a, F: Smooth2> L1Applied<'a, F> {
    pub fn new(sp: &SchrodingerParams, inner: &'a F) -> Self {
        Self { c: sp.c(), inner }
    }
}

impl<F: Smooth2> Smooth for L1Applied<'_, F> {
    fn value(&self, y: f64) -> f64 {
        -self.inner.d1(-y) - self.c * self.inner.value(-y) / y.cos()
    }

    fn d1(&self, y: f64) -> f64 {
        let cos = y.cos();
        self.inner.d2(-y) + self.c * self.inner.d1(-y) / cos - self.c * self.inner.value(-y) * y.sin() / (cos * cos)
    }
}

/// Central-difference `-f'' + U f` with step `h`.
pub fn h1_finite_difference(sp: &SchrodingerParams, f: &impl Smooth, y: f64, h: f64) -> Result<f64> {
    check_domain(y - h)?;
    check_domain(y + h)?;
    let second = (f.value(y + h) - 2.0 * f.value(y) + f.value(y - h)) / (h * h);
    Ok(-second + potential(sp, y)? * f.value(y))
}

/// `n` points evenly spread over `[-π/2 + margin, π/2 - margin]`.
pub fn grid(points: usize, margin: f64) -> Vec<f64> {
    let lo = -FRAC_PI_2 + margin;
    let hi = FRAC_PI_2 - margin;
    match points {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => (0..points).map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64).collect(),
    }
}

/// Samples of a function and its analytic derivative on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveSample {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub derivative_values: Vec<f64>,
}

impl WaveSample {
    pub fn of(f: &impl Smooth, grid: Vec<f64>) -> Result<Self> {
        for &y in &grid {
            check_domain(y)?;
        }
        let values: Vec<f64> = grid.iter().map(|&y| f.value(y)).collect();
        if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::OutOfRange(grid[bad]));
        }
        let derivative_values = grid.iter().map(|&y| f.d1(y)).collect();
        Ok(Self { grid, values, derivative_values })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Number of strict sign changes, skipping exact zeros.
    pub fn sign_changes(&self) -> usize {
        let signs: Vec<bool> = self.values.iter().filter(|v| **v != 0.0).map(|v| *v > 0.0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Worst scaled residuals of an eigen relation over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResiduals {
    /// `max |L_1 ψ_n - (-1)^{n+1}(a+n+1) ψ_n| / max|ψ_n|`
    pub l1: f64,
    /// `max |H_1 ψ_n - E_n ψ_n| / max|ψ_n|`
    pub h1: f64,
}

pub fn eigen_residuals(sp: &SchrodingerParams, n: usize, ys: &[f64]) -> Result<EigenResiduals> {
    let psi = eigenfunction(sp, n);
    let scale = WaveSample::of(&psi, ys.to_vec())?.max_abs();
    let (mu, e) = (l1_eigenvalue(sp, n), energy(sp, n));
    let mut worst = EigenResiduals { l1: 0.0, h1: 0.0 };
    for &y in ys {
        let v = psi.value(y);
        worst.l1 = worst.l1.max((apply_l1(sp, &psi, y)? - mu * v).abs() / scale);
        worst.h1 = worst.h1.max((apply_h1(sp, &psi, y)? - e * v).abs() / scale);
    }
    Ok(worst)
}

/// `max |L_1² f - H_1 f| / max(1, |H_1 f|)` over the grid.
pub fn square_root_residual(sp: &SchrodingerParams, f: &(impl Smooth2 + Sized), ys: &[f64]) -> Result<f64> {
    let once = L1Applied::new(sp, f);
    let mut worst = 0.0f64;
    for &y in ys {
        let twice = apply_l1(sp, &once, y)?;
        let direct = apply_h1(sp, f, y)?;
        worst = worst.max((twice - direct).abs() / direct.abs().max(1.0));
    }
    Ok(worst)
}

/// Outcome of the factorization/refactorization conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationReport {
    pub holds: bool,
    /// Worst scaled residual of each condition:
    /// `2χ' = U(y) - U(-y)`, `2χ² = U(y) + U(-y) + 2C`,
    /// `χ² - χ' = U(-y) + C`, `χ² + χ' = U(y) + C`.
    pub worst: [f64; 4],
    /// Sample where the overall worst residual occurs.
    pub worst_y: Option<f64>,
}

pub const FACTORIZATION_TOL: f64 = 1e-10;

/// Each residual is divided by `max(1, |largest term|)` since `U` and `χ²`
/// grow like `1/cos² y` toward the walls.
pub fn factorization_check(chi: &impl Smooth, u: impl Fn(f64) -> f64, c: f64, ys: &[f64]) -> FactorizationReport {
    let mut worst = [0.0f64; 4];
    let mut overall = (0.0f64, None);
    for &y in ys {
        let (x, dx) = (chi.value(y), chi.d1(y));
        let (up, um) = (u(y), u(-y));
        let x2 = x * x;
        let conditions = [
            (2.0 * dx, up - um),
            (2.0 * x2, up + um + 2.0 * c),
            (x2 - dx, um + c),
            (x2 + dx, up + c),
        ];
        for (k, (lhs, rhs)) in conditions.iter().enumerate() {
            let scale = 1f64.max(lhs.abs()).max(rhs.abs()).max(up.abs()).max(um.abs());
            let r = (lhs - rhs).abs() / scale;
            worst[k] = worst[k].max(r);
            if r > overall.0 {
                overall = (r, Some(y));
            }
        }
    }
    FactorizationReport { holds: worst.iter().all(|w| *w <= FACTORIZATION_TOL), worst, worst_y: overall.1 }
}

/// `χ(y) = -(a+1/2)/cos y`, the superpotential of this well.
pub fn superpotential(sp: &SchrodingerParams) -> FnSmooth<impl Fn(f64) -> f64, impl Fn(f64) -> f64> {
    let c = sp.c();
    FnSmooth { f: move |y: f64| -c / y.cos(), df: move |y: f64| -c * y.sin() / (y.cos() * y.cos()) }
}

/// `(R L_1 ψ_n)(y)` and `(-1)^{n+1}(a+n+1) ψ_n(-y)`.
pub fn darboux_flip(sp: &SchrodingerParams, n: usize, y: f64) -> Result<(f64, f64)> {
    let psi = eigenfunction(sp, n);
    let lhs = apply_l1(sp, &psi, -y)?;
    Ok((lhs, l1_eigenvalue(sp, n) * psi.value(-y)))
}

/// `H_1(Φp)` and `Φ · ((-S_0 + (a+1)²) p)(sin y)` at `y`, with `S_0`
/// applied exactly.
pub fn conjugation_check(sp: &SchrodingerParams, p: &Poly<Rational>, y: f64) -> Result<(f64, f64)> {
    let degree = p.degree().finite().unwrap_or(0);
    let shift = (sp.a() + Rational::one()) * (sp.a() + Rational::one());
    let s0p = make_s0(sp.a(), degree).apply(p)?;
    let rhs_poly = &p.scale(&shift) - &s0p;
    let lhs = apply_h1(sp, &PhiPoly::new(sp, p), y)?;
    let rhs = PhiPoly::new(sp, &rhs_poly).value(y);
    Ok((lhs, rhs))
}

/// The polynomial factor of `ψ_n` is a multiple of `P_n(s; 0, 2a+1)`.
pub fn wave_polynomial_is_little_jacobi(sp: &SchrodingerParams, n: usize) -> bool {
    wave_polynomial(sp, n).monic() == Some(generate_monic(&sp.little_params(), n))
}
