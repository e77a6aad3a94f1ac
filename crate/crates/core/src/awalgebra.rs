//! The q = −1 realization of the Askey–Wilson algebra AW(3) on polynomials:
//! `X = L_0/2 - (1+α+β)/2`, `Y = x`, `Z = (x-1) R`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::littlejacobi::{eigenvalue, generate_monic, ParamPair};
use crate::numcore::Poly;
use crate::opcalc::{make_l0, BandedOp};
use crate::report::CheckReport;
use crate::scalar::{int, Rational};
use crate::RatOp;

/// Shift in `X = L_0/2 - (1+α+β)/2`.
fn x_shift(p: &ParamPair) -> Rational {
    -(int(1) + p.alpha() + p.beta()) / int(2)
}

pub fn build_xyz(p: &ParamPair, trunc_degree: usize) -> (RatOp, RatOp, RatOp) {
    let x = make_l0(p.alpha(), p.beta(), trunc_degree)
        .scale(&(Rational::one() / int(2)))
        .add_scalar(&x_shift(p));
    let y = BandedOp::mult_x(trunc_degree);
    let z = BandedOp::multiply_by(&Poly::from_ints(&[-1, 1]), trunc_degree).compose(&BandedOp::reflection(trunc_degree));
    (x, y, z)
}

/// Relation residual: the operator left after subtracting the linear part.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationResidual {
    pub relation: &'static str,
    pub residual: RatOp,
}

/// Structure constants of the anticommutator relations
///
/// ```text
/// XY + YX = Z + ω3
/// YZ + ZY =     ω1
/// ZX + XZ = Y + ω2
/// ```
///
/// read off from the residual operators.
#[derive(Debug, Clone, PartialEq)]
pub struct AWStructure {
    pub omega1: Rational,
    pub omega2: Rational,
    pub omega3: Rational,
    pub casimir_is_identity: bool,
    pub relation_residuals: Vec<RelationResidual>,
    pub safe_degree: usize,
}

/// Column -> nonzero `(row, coefficient)` entries of one residual.
type ResidualDump = BTreeMap<usize, Vec<(usize, String)>>;

#[derive(Serialize)]
struct AWReportJson<'a> {
    params: BTreeMap<&'static str, String>,
    omega1: String,
    omega2: String,
    omega3: String,
    omega3_sign: &'static str,
    omega3_abs_equals_alpha: bool,
    casimir_is_identity: bool,
    safe_degree: usize,
    residuals: BTreeMap<&'a str, ResidualDump>,
}

impl AWStructure {
    pub fn omega3_sign(&self) -> &'static str {
        if self.omega3.is_positive() {
            "+"
        } else if self.omega3.is_negative() {
            "-"
        } else {
            "0"
        }
    }

    pub fn to_json(&self, p: &ParamPair) -> String {
        let report = AWReportJson {
            params: BTreeMap::from([("alpha", p.alpha().to_string()), ("beta", p.beta().to_string())]),
            omega1: self.omega1.to_string(),
            omega2: self.omega2.to_string(),
            omega3: self.omega3.to_string(),
            omega3_sign: self.omega3_sign(),
            omega3_abs_equals_alpha: self.omega3.abs() == p.alpha().abs(),
            casimir_is_identity: self.casimir_is_identity,
            safe_degree: self.safe_degree,
            residuals: self.relation_residuals.iter().map(|r| (r.relation, r.residual.dump())).collect(),
        };
        serde_json::to_string(&report).expect("report serializes")
    }
}

fn need_room(trunc_degree: usize) -> Result<()> {
    if trunc_degree < 4 {
        return Err(Error::Domain(format!("AW(3) checks need truncation N >= 4, got {trunc_degree}")));
    }
    Ok(())
}

fn scalar_of(relation: &'static str, residual: &RatOp) -> Result<Rational> {
    residual.as_scalar_identity().ok_or(Error::AlgebraViolation { relation })
}

fn casimir(y: &RatOp, z: &RatOp) -> RatOp {
    y.compose(y).add(&z.compose(z))
}

/// Compute the three anticommutator residuals and extract `ω1, ω2, ω3`.
///
/// Fails with an algebra-violation error if a residual is not a scalar
/// multiple of the identity.
pub fn verify_relations(p: &ParamPair, trunc_degree: usize) -> Result<AWStructure> {
    need_room(trunc_degree)?;
    let (x, y, z) = build_xyz(p, trunc_degree);
    let xy = x.anticommutator(&y).sub(&z);
    let yz = y.anticommutator(&z);
    let zx = z.anticommutator(&x).sub(&y);
    let omega3 = scalar_of("XY+YX-Z", &xy)?;
    let omega1 = scalar_of("YZ+ZY", &yz)?;
    let omega2 = scalar_of("ZX+XZ-Y", &zx)?;
    let q = casimir(&y, &z);
    let safe_degree = [&xy, &yz, &zx].iter().map(|r| r.safe_degree()).min().expect("three relations");
    Ok(AWStructure {
        omega1,
        omega2,
        omega3,
        casimir_is_identity: q.as_scalar_identity() == Some(Rational::one()),
        relation_residuals: vec![
            RelationResidual { relation: "XY+YX-Z", residual: xy },
            RelationResidual { relation: "YZ+ZY", residual: yz },
            RelationResidual { relation: "ZX+XZ-Y", residual: zx },
        ],
        safe_degree,
    })
}

/// `Q = Y² + Z²` is the identity and commutes with `X`, `Y`, `Z`.
pub fn verify_casimir(p: &ParamPair, trunc_degree: usize) -> Result<bool> {
    need_room(trunc_degree)?;
    let (x, y, z) = build_xyz(p, trunc_degree);
    let q = casimir(&y, &z);
    let identity = q.as_scalar_identity() == Some(Rational::one());
    let commutes = [&x, &y, &z].iter().all(|g| q.commutator(g).is_zero());
    Ok(identity && commutes)
}

/// `X P_n = (λ_n/2 - (1+α+β)/2) P_n`.
pub fn x_eigen_check(p: &ParamPair, n: usize) -> Result<CheckReport> {
    let (x, _, _) = build_xyz(p, n);
    let pn = generate_monic(p, n);
    let lhs = x.apply(&pn)?;
    let value = eigenvalue(p, n) / int(2) + x_shift(p);
    Ok(CheckReport::compare(
        "aw_x_diagonal",
        &[("alpha", p.alpha()), ("beta", p.beta())],
        n,
        lhs,
        pn.scale(&value),
    ))
}

/// `Y` is tridiagonal in the eigenbasis of `X`: `Y P_n = P_{n+1} + b_n P_n + u_n P_{n-1}`
/// has no other components. Returns true if the coefficient vector found by
/// back-substitution has support in `{n-1, n, n+1}`.
pub fn y_tridiagonal_in_x_basis(p: &ParamPair, n: usize) -> bool {
    let basis = crate::littlejacobi::generate_family(p, n + 1);
    let mut rest = basis[n].shift_up(1);
    for k in (0..=n + 1).rev() {
        let c = rest.coeff(k);
        if c.is_zero() {
            continue;
        }
        if k + 1 < n {
            return false;
        }
        rest = &rest - &basis[k].scale(&c);
    }
    rest.is_zero()
}
