//! Classical Jacobi and generalized Gegenbauer polynomials, the
//! Christoffel/Geronimus transforms that connect them to the little −1
//! Jacobi family, and the Dunkl lowering/raising/intertwining checks.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::littlejacobi::{generate_monic, ParamPair, RecurrenceCoeffs};
use crate::numcore::{pochhammer, terminating_2f1, Poly};
use crate::opcalc::{dunkl_bracket, intertwiner_sigma, make_dunkl, make_intertwiner, make_theta, BandedOp};
use crate::report::CheckReport;
use crate::scalar::{int, rat, sign_pow, Rational};

/// Jacobi parameters `(ξ, η)`, both `> -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct JacobiParams {
    #[serde(serialize_with = "crate::littlejacobi::ser_rational")]
    xi: Rational,
    #[serde(serialize_with = "crate::littlejacobi::ser_rational")]
    eta: Rational,
}

impl JacobiParams {
    pub fn new(xi: Rational, eta: Rational) -> Result<Self> {
        let minus_one = -Rational::one();
        if xi <= minus_one || eta <= minus_one {
            return Err(Error::Domain(format!("Jacobi parameters must be > -1, got ({xi}, {eta})")));
        }
        Ok(Self { xi, eta })
    }

    pub fn xi(&self) -> &Rational {
        &self.xi
    }

    pub fn eta(&self) -> &Rational {
        &self.eta
    }

    fn shifted(&self, dxi: i64, deta: i64) -> Self {
        Self { xi: &self.xi + int(dxi), eta: &self.eta + int(deta) }
    }

    /// `(ξ, η) = ((α-1)/2, (β-1)/2)`, whose Christoffel transform at `-1`
    /// reproduces the little −1 Jacobi weight.
    pub fn from_little(p: &ParamPair) -> Self {
        let half = |r: Rational| (r - int(1)) / int(2);
        Self { xi: half(p.alpha().clone()), eta: half(p.beta().clone()) }
    }

    /// Inverse of [`JacobiParams::from_little`]: `(α, β) = (2ξ+1, 2η+1)`.
    pub fn to_little(&self) -> Result<ParamPair> {
        ParamPair::new(int(2) * &self.xi + int(1), int(2) * &self.eta + int(1))
    }
}

/// Monic Jacobi polynomial orthogonal on `[0, 1]` for `x^ξ (1-x)^η`.
pub fn monic_jacobi_01(jp: &JacobiParams, n: usize) -> Poly<Rational> {
    let nn = int(n as i64);
    terminating_2f1(&-&nn, &(&nn + &jp.xi + &jp.eta + int(1)), &(&jp.xi + int(1)), 1)
        .expect("ξ > -1 keeps (ξ+1)_k nonzero")
        .monic()
        .expect("top coefficient is nonzero in the parameter domain")
}

/// Monic Jacobi polynomial on `[-1, 1]`:
/// `2^n (ξ+1)_n / (ξ+η+n+1)_n · 2F1(-n, n+ξ+η+1; ξ+1; (1-x)/2)`.
///
/// Only the Pochhammer denominators are checked, so parameters outside
/// `(-1, ∞)²` work whenever the formula is finite.
pub fn jacobi_sym_raw(xi: &Rational, eta: &Rational, n: usize) -> Result<Poly<Rational>> {
    let nn = int(n as i64);
    let series = terminating_2f1(&-&nn, &(&nn + xi + eta + int(1)), &(xi + int(1)), 1)?;
    let den = pochhammer(&(xi + eta + &nn + int(1)), n);
    if den.is_zero() {
        return Err(Error::Domain(format!("(ξ+η+n+1)_n vanishes for ξ = {xi}, η = {eta}, n = {n}")));
    }
    let prefactor = num_traits::pow(int(2), n) * pochhammer(&(xi + int(1)), n) / den;
    Ok(series.compose_affine(&rat(-1, 2), &rat(1, 2)).scale(&prefactor))
}

pub fn monic_jacobi_sym(jp: &JacobiParams, n: usize) -> Poly<Rational> {
    jacobi_sym_raw(&jp.xi, &jp.eta, n).expect("parameters > -1 keep the prefactor finite")
}

/// Generalized Gegenbauer `S_{2m} = P_m^{(ξ,η)}(x²)`, `S_{2m+1} = x P_m^{(ξ+1,η)}(x²)`.
pub fn symmetric_gegenbauer(jp: &JacobiParams, n: usize) -> Poly<Rational> {
    let m = n / 2;
    if n % 2 == 0 {
        monic_jacobi_01(jp, m).compose_x2()
    } else {
        monic_jacobi_01(&jp.shifted(1, 0), m).compose_x2().shift_up(1)
    }
}

/// Christoffel transform at the kernel point `-1`:
/// `(S_{n+1} - A_n S_n) / (x+1)` with `A_n = S_{n+1}(-1) / S_n(-1)`.
pub fn christoffel_transform(jp: &JacobiParams, n: usize) -> Result<Poly<Rational>> {
    let minus_one = -Rational::one();
    let s_next = symmetric_gegenbauer(jp, n + 1);
    let s_n = symmetric_gegenbauer(jp, n);
    let at_kernel = s_n.eval(&minus_one);
    if at_kernel.is_zero() {
        return Err(Error::KernelPoint(n));
    }
    let a_n = s_next.eval(&minus_one) / at_kernel;
    let (quot, rem) = (&s_next - &s_n.scale(&a_n)).div_rem(&Poly::from_ints(&[1, 1]));
    if !rem.is_zero() {
        return Err(Error::Consistency(format!("Christoffel quotient leaves remainder {rem} at n = {n}")));
    }
    Ok(quot)
}

/// Recurrence data of the Christoffel-transformed family, read off the
/// generated polynomials `S̃_{n-1}, S̃_n, S̃_{n+1}`.
pub fn christoffel_recurrence(jp: &JacobiParams, n: usize) -> Result<RecurrenceCoeffs> {
    let cur = christoffel_transform(jp, n)?;
    let next = christoffel_transform(jp, n + 1)?;
    // subleading coefficients: x S̃_n - S̃_{n+1} = b̃_n S̃_n + ũ_n S̃_{n-1}
    let sub = |p: &Poly<Rational>, d: usize| if d == 0 { Rational::zero() } else { p.coeff(d - 1) };
    let b = sub(&cur, n) - sub(&next, n + 1);
    let rest = &(&cur.shift_up(1) - &next) - &cur.scale(&b);
    let u = if n == 0 {
        if !rest.is_zero() {
            return Err(Error::Consistency("S̃_1 is not (x - b̃_0) S̃_0".into()));
        }
        None
    } else {
        let prev = christoffel_transform(jp, n - 1)?;
        let u = rest.coeff(n - 1);
        if rest != prev.scale(&u) {
            return Err(Error::Consistency(format!("transformed family breaks the three-term recurrence at n = {n}")));
        }
        Some(u)
    };
    Ok(RecurrenceCoeffs { u, b })
}

/// Geronimus coefficient `B_n = (2n + (1-(-1)^n) α) / (2(α+β+2n))`.
pub fn geronimus_b(p: &ParamPair, n: usize) -> Rational {
    let (a, b) = (p.alpha(), p.beta());
    let two_n = int(2 * n as i64);
    (&two_n + int(1 - sign_pow(n)) * a) / (int(2) * (a + b + &two_n))
}

/// `S_n^{(ξ,η)} - B S_{n-1}^{(ξ,η)}`, with `S_{-1} = 0`.
pub fn geronimus_combination(jp: &JacobiParams, b_n: &Rational, n: usize) -> Poly<Rational> {
    let s_n = symmetric_gegenbauer(jp, n);
    if n == 0 {
        return s_n;
    }
    &s_n - &symmetric_gegenbauer(jp, n - 1).scale(b_n)
}

fn little_params(p: &ParamPair) -> [(&'static str, &Rational); 2] {
    [("alpha", p.alpha()), ("beta", p.beta())]
}

/// Identification of `P_n^{(α,β)}` with the transformed generalized
/// Gegenbauer polynomials, `(ξ, η) = ((α-1)/2, (β-1)/2)`:
///
/// 1. `P_n = S_n^{(ξ,η+1)} - B_n S_{n-1}^{(ξ,η+1)}` (Geronimus form)
/// 2. Christoffel transform of `S^{(ξ,η)}` equals that Geronimus form.
pub fn identify_little(p: &ParamPair, n: usize) -> Result<[CheckReport; 2]> {
    let jp = JacobiParams::from_little(p);
    let geronimus = geronimus_combination(&jp.shifted(0, 1), &geronimus_b(p, n), n);
    let christoffel = christoffel_transform(&jp, n)?;
    Ok([
        CheckReport::compare("identify.geronimus", &little_params(p), n, geronimus.clone(), generate_monic(p, n)),
        CheckReport::compare("identify.christoffel", &little_params(p), n, christoffel, geronimus),
    ])
}

/// Christoffel at `(ξ, η)` against Geronimus at `(ξ, η+1)` for arbitrary
/// Jacobi parameters, with `B_n` evaluated at `(α, β) = (2ξ+1, 2η+1)`.
pub fn christoffel_geronimus_agree(jp: &JacobiParams, n: usize) -> Result<CheckReport> {
    let little = jp.to_little()?;
    let lhs = christoffel_transform(jp, n)?;
    let rhs = geronimus_combination(&jp.shifted(0, 1), &geronimus_b(&little, n), n);
    Ok(CheckReport::compare("christoffel_geronimus", &[("xi", jp.xi()), ("eta", jp.eta())], n, lhs, rhs))
}

/// `T_{α/2} P_n^{(α,β)} = [n]_{α/2} P_{n-1}^{(α,β+2)}`.
pub fn dunkl_classical_check(p: &ParamPair, n: usize) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::Domain("Dunkl-classical property starts at n = 1".into()));
    }
    let mu = p.alpha() / int(2);
    let lhs = make_dunkl(&mu, n).apply(&generate_monic(p, n))?;
    let rhs = generate_monic(&p.with_beta_shift(2)?, n - 1).scale(&dunkl_bracket(n, &mu));
    Ok(CheckReport::compare("dunkl_classical", &little_params(p), n, lhs, rhs))
}

/// `ν_n = β - 1 + [n]_{α/2}`
pub fn raising_nu(p: &ParamPair, n: usize) -> Rational {
    p.beta() - int(1) + dunkl_bracket(n, &(p.alpha() / int(2)))
}

/// `Θ P_n^{(α,β)} = ν_{n+1} P_{n+1}^{(α,β-2)}`; needs `β > 1`.
pub fn raising_check(p: &ParamPair, n: usize) -> Result<CheckReport> {
    if *p.beta() <= int(1) {
        return Err(Error::Domain(format!("raising operator needs beta > 1, got {}", p.beta())));
    }
    let lhs = make_theta(p.alpha(), p.beta(), n).apply(&generate_monic(p, n))?;
    let rhs = generate_monic(&p.with_beta_shift(-2)?, n + 1).scale(&raising_nu(p, n + 1));
    Ok(CheckReport::compare("raising", &little_params(p), n, lhs, rhs))
}

/// `σ_n^{-1} V_{α/2} P_n^{(ξ,ξ+1)} = P_n^{(α,β)}` with `ξ = (α+β-1)/2`.
pub fn intertwined_jacobi_check(p: &ParamPair, n: usize) -> Result<CheckReport> {
    let mu = p.alpha() / int(2);
    let xi = (p.alpha() + p.beta() - int(1)) / int(2);
    let jacobi = jacobi_sym_raw(&xi, &(&xi + int(1)), n)?;
    let lhs = make_intertwiner(&mu, n)?
        .apply(&jacobi)?
        .scale(&(Rational::one() / intertwiner_sigma(&mu, n)));
    Ok(CheckReport::compare("intertwined_jacobi", &little_params(p), n, lhs, generate_monic(p, n)))
}

/// `T_μ S_n^{(ξ,η)} = [n]_μ S_{n-1}^{(ξ,η+1)}` with `μ = ξ + 1/2`.
pub fn gegenbauer_dunkl_check(jp: &JacobiParams, n: usize) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::Domain("Dunkl-classical property starts at n = 1".into()));
    }
    let mu = jp.xi() + rat(1, 2);
    let lhs = make_dunkl(&mu, n).apply(&symmetric_gegenbauer(jp, n))?;
    let rhs = symmetric_gegenbauer(&jp.shifted(0, 1), n - 1).scale(&dunkl_bracket(n, &mu));
    Ok(CheckReport::compare("gegenbauer_dunkl", &[("xi", jp.xi()), ("eta", jp.eta())], n, lhs, rhs))
}

/// Hahn property of the classical Jacobi family `P^{(a,a+1)}`:
/// `∂ P_n^{(a,a+1)} = n P_{n-1}^{(a+1,a+2)}`.
pub fn hahn_check(a: &Rational, n: usize) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::Domain("Hahn property starts at n = 1".into()));
    }
    let jp = JacobiParams::new(a.clone(), a + int(1))?;
    let lhs = BandedOp::derivative(n).apply(&monic_jacobi_sym(&jp, n))?;
    let rhs = monic_jacobi_sym(&jp.shifted(1, 1), n - 1).scale(&int(n as i64));
    Ok(CheckReport::compare("hahn", &[("a", a)], n, lhs, rhs))
}

/// At `α = 0` the little −1 Jacobi family with `β = 2a+1` is the classical
/// Jacobi family `P^{(a,a+1)}`.
pub fn alpha_zero_is_jacobi(a: &Rational, n: usize) -> Result<CheckReport> {
    let p = ParamPair::new(int(0), int(2) * a + int(1))?;
    let jp = JacobiParams::new(a.clone(), a + int(1))?;
    Ok(CheckReport::compare("alpha_zero_jacobi", &[("a", a)], n, generate_monic(&p, n), monic_jacobi_sym(&jp, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::littlejacobi::{recurrence_b, recurrence_u};
    use crate::numcore::Degree;

    fn jp(xi: Rational, eta: Rational) -> JacobiParams {
        JacobiParams::new(xi, eta).unwrap()
    }

    fn pp(a: Rational, b: Rational) -> ParamPair {
        ParamPair::new(a, b).unwrap()
    }

    #[test]
    fn jacobi_01_examples() {
        let z = jp(int(0), int(0));
        assert_eq!(monic_jacobi_01(&z, 0), Poly::one());
        assert_eq!(monic_jacobi_01(&z, 1), Poly::new(vec![rat(-1, 2), int(1)]));
    }

    #[test]
    fn jacobi_01_top_term() {
        let j = jp(rat(1, 3), rat(-1, 2));
        for n in 0..8usize {
            let nn = int(n as i64);
            let series = terminating_2f1(&-&nn, &(&nn + j.xi() + j.eta() + int(1)), &(j.xi() + int(1)), 1).unwrap();
            let expected = pochhammer(&-&nn, n) * pochhammer(&(&nn + j.xi() + j.eta() + int(1)), n)
                / (pochhammer(&(j.xi() + int(1)), n) * pochhammer(&int(1), n));
            assert_eq!(series.leading_coeff().cloned(), Some(expected));
        }
    }

    #[test]
    fn jacobi_sym_examples() {
        let z = jp(int(0), int(0));
        assert_eq!(monic_jacobi_sym(&z, 0), Poly::one());
        assert_eq!(monic_jacobi_sym(&z, 1), Poly::x());
        for j in [jp(rat(1, 2), rat(3, 2)), jp(rat(-2, 3), rat(5, 7)), jp(int(4), rat(-1, 4))] {
            for n in 0..=10 {
                assert!(monic_jacobi_sym(&j, n).is_monic(), "{j:?} n = {n}");
            }
        }
    }

    #[test]
    fn gegenbauer_examples_and_symmetry() {
        let z = jp(int(0), int(0));
        assert_eq!(symmetric_gegenbauer(&z, 0), Poly::one());
        assert_eq!(symmetric_gegenbauer(&z, 1), Poly::x());
        assert_eq!(symmetric_gegenbauer(&z, 2), Poly::new(vec![rat(-1, 2), int(0), int(1)]));
        for j in [z, jp(rat(-1, 4), rat(1, 4)), jp(rat(3, 2), int(2))] {
            for n in 0..=20 {
                let s = symmetric_gegenbauer(&j, n);
                let sign = int(sign_pow(n));
                assert_eq!(s.reflect(), s.scale(&sign));
                assert_eq!(s.degree(), Degree::Finite(n));
            }
        }
    }

    #[test]
    fn christoffel_examples() {
        let z = jp(int(0), int(0));
        assert_eq!(christoffel_transform(&z, 0).unwrap(), Poly::one());
        // (x² - 1/2 + x/2) / (x + 1) = x - 1/2
        assert_eq!(christoffel_transform(&z, 1).unwrap(), Poly::new(vec![rat(-1, 2), int(1)]));
        for n in 0..=12 {
            let c = christoffel_transform(&jp(rat(1, 3), rat(2, 5)), n).unwrap();
            assert!(c.is_monic());
            assert_eq!(c.degree(), Degree::Finite(n));
        }
    }

    #[test]
    fn geronimus_b_examples() {
        let p = pp(int(1), int(1));
        assert_eq!(geronimus_b(&p, 1), rat(1, 2));
        assert_eq!(geronimus_b(&p, 2), rat(1, 3));
        let q = pp(int(0), rat(7, 3));
        for n in [2usize, 4, 6] {
            assert_eq!(geronimus_b(&q, n), int(n as i64) / (q.beta() + int(2 * n as i64)));
        }
    }

    #[test]
    fn identification_examples() {
        let [g, c] = identify_little(&pp(int(1), int(1)), 1).unwrap();
        assert!(g.holds && c.holds);
        assert_eq!(g.lhs, Poly::new(vec![rat(-1, 2), int(1)]));
        for (p, n) in [(pp(int(1), int(1)), 0), (pp(int(0), int(2)), 2)] {
            assert!(identify_little(&p, n).unwrap().iter().all(|r| r.holds));
        }
    }

    #[test]
    fn literal_eta_form_fails_beyond_first_degree() {
        // The Geronimus form with the unshifted (ξ, η) only agrees at n ≤ 1.
        let p = pp(int(1), int(1));
        let jp = JacobiParams::from_little(&p);
        for n in 0..=1 {
            assert_eq!(geronimus_combination(&jp, &geronimus_b(&p, n), n), generate_monic(&p, n));
        }
        assert_ne!(geronimus_combination(&jp, &geronimus_b(&p, 2), 2), generate_monic(&p, 2));
    }

    #[test]
    fn christoffel_geronimus_agreement_general() {
        for j in [jp(rat(-1, 4), rat(1, 4)), jp(int(0), int(0)), jp(rat(3, 2), rat(-1, 3))] {
            for n in 0..=12 {
                assert!(christoffel_geronimus_agree(&j, n).unwrap().holds, "{j:?} n = {n}");
            }
        }
    }

    #[test]
    fn christoffel_recurrence_matches_little() {
        let p = pp(rat(1, 2), rat(3, 2));
        let j = JacobiParams::from_little(&p);
        for n in 0..=8 {
            let rc = christoffel_recurrence(&j, n).unwrap();
            assert_eq!(rc.b, recurrence_b(&p, n));
            assert_eq!(rc.u, recurrence_u(&p, n));
        }
    }

    #[test]
    fn dunkl_classical_examples() {
        let r = dunkl_classical_check(&pp(int(0), int(0)), 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Poly::new(vec![rat(-1, 2), int(2)]));
        for p in [pp(rat(1, 2), rat(3, 2)), pp(int(3), rat(-1, 2))] {
            let r = dunkl_classical_check(&p, 1).unwrap();
            assert_eq!(r.lhs, Poly::constant(p.alpha() + int(1)));
            assert!(r.holds);
        }
        assert!(dunkl_classical_check(&pp(int(0), int(0)), 0).is_err());
    }

    #[test]
    fn hahn_at_alpha_zero() {
        for a in [rat(3, 2), int(0), rat(-1, 3)] {
            for n in 1..=12 {
                assert!(hahn_check(&a, n).unwrap().holds);
                assert!(dunkl_classical_check(&pp(int(0), int(2) * &a + int(1)), n).unwrap().holds);
                assert!(alpha_zero_is_jacobi(&a, n).unwrap().holds);
            }
        }
    }

    #[test]
    fn raising_examples() {
        let r = raising_check(&pp(int(1), int(3)), 0).unwrap();
        assert_eq!(r.lhs, Poly::from_ints(&[-2, 4]));
        assert_eq!(raising_nu(&pp(int(1), int(3)), 1), int(4));
        assert!(r.holds);
        let r = raising_check(&pp(int(0), int(2)), 0).unwrap();
        assert_eq!(r.lhs, Poly::from_ints(&[-1, 2]));
        assert!(r.holds);
        assert!(matches!(raising_check(&pp(int(0), int(1)), 0), Err(Error::Domain(_))));
    }

    #[test]
    fn intertwined_jacobi_examples() {
        let r = intertwined_jacobi_check(&pp(int(0), int(0)), 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Poly::new(vec![rat(-1, 2), int(1)]));
        assert!(intertwined_jacobi_check(&pp(rat(1, 2), rat(3, 2)), 0).unwrap().holds);
        for n in 0..=8 {
            assert!(intertwined_jacobi_check(&pp(int(1), int(1)), n).unwrap().holds);
        }
    }

    #[test]
    fn gegenbauer_dunkl_property() {
        for j in [jp(rat(-1, 4), rat(1, 4)), jp(int(1), rat(2, 3))] {
            for n in 1..=12 {
                assert!(gegenbauer_dunkl_check(&j, n).unwrap().holds);
            }
        }
    }

    #[test]
    fn report_json() {
        let r = raising_check(&pp(int(0), int(2)), 0).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["check"], "raising");
        assert_eq!(v["params"]["beta"], "2");
        assert_eq!(v["holds"], true);
        assert!(v["first_mismatch_degree"].is_null());
        assert_eq!(v["rhs"], serde_json::json!(["-1", "2"]));
    }
}
