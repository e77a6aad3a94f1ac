use std::io::Write;

use minusone::awalgebra::{verify_casimir, verify_relations, x_eigen_check};
use minusone::littlejacobi::{eigenvalue, explicit_poly, generate_family, moments, norm_squared, probe_limit, ParamPair};
use minusone::numcore::Poly;
use minusone::opcalc::make_l0;
use minusone::susyqm::{
    darboux_flip, eigen_residuals, factorization_check, grid, potential, square_root_residual, superpotential, PhiPoly,
    SchrodingerParams, GRID_MARGIN,
};
use minusone::transforms::{
    christoffel_geronimus_agree, dunkl_classical_check, identify_little, intertwined_jacobi_check, raising_check,
    JacobiParams,
};
use minusone::{rat, CheckReport};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::{CliError, Format, Suite};

/// Floating-point tolerance for the SUSY residuals.
const SUSY_TOL: f64 = 1e-8;
/// Allowed relative spread of the q-limit error ratio around `coarse/fine`.
const QLIMIT_SLACK: f64 = 0.2;

pub struct SuiteConfig {
    pub params: ParamPair,
    pub max_degree: usize,
    pub well: SchrodingerParams,
    pub levels: usize,
    pub eps: (f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct Line {
    pub suite: &'static str,
    pub check: String,
    pub n: Option<usize>,
    pub status: Status,
    pub detail: String,
    #[serde(skip)]
    pub pass: bool,
}

fn line(suite: &'static str, check: impl Into<String>, n: Option<usize>, pass: bool, detail: String) -> Line {
    let status = if pass { Status::Pass } else { Status::Fail };
    Line { suite, check: check.into(), n, status, detail, pass }
}

fn from_report(suite: &'static str, r: &CheckReport) -> Line {
    let detail = match r.first_mismatch_degree {
        None => "exact".to_string(),
        Some(k) => format!("first mismatch at x^{k}"),
    };
    line(suite, r.check.clone(), Some(r.n), r.holds, detail)
}

const ORDER: [Suite; 10] = [
    Suite::Orthogonality,
    Suite::Eigen,
    Suite::Explicit,
    Suite::Dunkl,
    Suite::Raising,
    Suite::Transforms,
    Suite::Aw,
    Suite::Prop2,
    Suite::Qlimit,
    Suite::Susy,
];

/// Runs one suite, or every suite in parallel for `Suite::All`. The output
/// order is fixed regardless of scheduling.
pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Line>, CliError> {
    if suite != Suite::All {
        return one(suite, cfg);
    }
    let per_suite: Vec<Result<Vec<Line>, CliError>> = ORDER
        .par_iter()
        .map(|&s| {
            if s == Suite::Raising && *cfg.params.beta() <= rat(1, 1) {
                return Ok(vec![Line {
                    suite: "raising",
                    check: "raising".into(),
                    n: None,
                    status: Status::Skip,
                    detail: format!("needs beta > 1, got {}", cfg.params.beta()),
                    pass: true,
                }]);
            }
            one(s, cfg)
        })
        .collect();
    let mut lines = Vec::new();
    for r in per_suite {
        lines.extend(r?);
    }
    Ok(lines)
}

fn one(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Line>, CliError> {
    let p = &cfg.params;
    let degrees = 0..=cfg.max_degree;
    Ok(match suite {
        Suite::Orthogonality => orthogonality(p, cfg.max_degree)?,
        Suite::Eigen => degrees
            .map(|n| {
                let pn = generate_family(p, n).pop().expect("nonempty");
                let lambda = eigenvalue(p, n);
                let lhs = make_l0(p.alpha(), p.beta(), n).apply(&pn)?;
                let r = CheckReport::compare("l0_eigen", &[], n, lhs, pn.scale(&lambda));
                let mut l = from_report("eigen", &r);
                l.detail = format!("lambda = {lambda}, {}", l.detail);
                Ok(l)
            })
            .collect::<Result<_, CliError>>()?,
        Suite::Explicit => {
            let family = generate_family(p, cfg.max_degree);
            degrees
                .map(|n| {
                    let r = CheckReport::compare("explicit_2f1", &[], n, explicit_poly(p, n)?, family[n].clone());
                    Ok(from_report("explicit", &r))
                })
                .collect::<Result<_, CliError>>()?
        }
        Suite::Dunkl => (1..=cfg.max_degree)
            .map(|n| Ok(from_report("dunkl", &dunkl_classical_check(p, n)?)))
            .collect::<Result<_, CliError>>()?,
        Suite::Raising => degrees
            .map(|n| Ok(from_report("raising", &raising_check(p, n)?)))
            .collect::<Result<_, CliError>>()?,
        Suite::Transforms => {
            let jp = JacobiParams::from_little(p);
            let mut lines = Vec::new();
            for n in degrees {
                for r in identify_little(p, n)? {
                    lines.push(from_report("transforms", &r));
                }
                lines.push(from_report("transforms", &christoffel_geronimus_agree(&jp, n)?));
            }
            lines
        }
        Suite::Aw => aw(p, cfg.max_degree)?,
        Suite::Prop2 => degrees
            .map(|n| Ok(from_report("prop2", &intertwined_jacobi_check(p, n)?)))
            .collect::<Result<_, CliError>>()?,
        Suite::Qlimit => qlimit(p, cfg.max_degree, cfg.eps)?,
        Suite::Susy => susy(&cfg.well, cfg.levels)?,
        Suite::All => unreachable!("handled by run"),
    })
}

fn orthogonality(p: &ParamPair, max_degree: usize) -> Result<Vec<Line>, CliError> {
    let family = generate_family(p, max_degree);
    let gram = moments(p, 2 * max_degree).gram(&family)?;
    Ok(gram
        .iter()
        .enumerate()
        .map(|(n, row)| {
            let off = row.iter().enumerate().find(|(k, v)| *k != n && !v.is_zero());
            let norm = norm_squared(p, n);
            let pass = off.is_none() && row[n] == norm && norm.is_positive();
            let detail = match off {
                Some((k, v)) => format!("<P_{n}, P_{k}> = {v}"),
                None => format!("<P_{n}, P_{n}> = {}", row[n]),
            };
            line("orthogonality", "gram_row", Some(n), pass, detail)
        })
        .collect())
}

fn aw(p: &ParamPair, max_degree: usize) -> Result<Vec<Line>, CliError> {
    let trunc = max_degree.max(4);
    let s = verify_relations(p, trunc)?;
    let ok = s.omega1.is_zero() && &s.omega2 == p.beta() && s.omega3.abs() == p.alpha().abs();
    let mut lines = vec![line(
        "aw",
        "relations",
        None,
        ok,
        format!(
            "omega1 = {}, omega2 = {}, omega3 = {} (sign {}), N = {trunc}",
            s.omega1,
            s.omega2,
            s.omega3,
            s.omega3_sign()
        ),
    )];
    let casimir = verify_casimir(p, trunc)?;
    lines.push(line("aw", "casimir", None, casimir, "Y^2 + Z^2 = I".into()));
    for n in 0..=max_degree {
        lines.push(from_report("aw", &x_eigen_check(p, n)?));
    }
    Ok(lines)
}

fn qlimit(p: &ParamPair, max_degree: usize, (coarse, fine): (f64, f64)) -> Result<Vec<Line>, CliError> {
    let expected = coarse / fine;
    let (lo, hi) = (expected * (1.0 - QLIMIT_SLACK), expected * (1.0 + QLIMIT_SLACK));
    (0..=max_degree)
        .map(|n| {
            let probe = probe_limit(p, n, coarse, fine)?;
            let ratios: Vec<f64> = probe.u_ratio().into_iter().chain([probe.b_ratio()]).collect();
            let pass = ratios.iter().all(|r| (lo..=hi).contains(r));
            let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.3}")).collect();
            Ok(line("qlimit", "error_ratio", Some(n), pass, format!("ratios {} (expect ~{expected})", shown.join(", "))))
        })
        .collect()
}

fn susy(sp: &SchrodingerParams, levels: usize) -> Result<Vec<Line>, CliError> {
    let ys = grid(200, GRID_MARGIN);
    let mut lines = Vec::new();
    let mut worst = 0.0f64;
    for n in 0..=levels {
        let r = eigen_residuals(sp, n, &ys)?;
        let mut flip = 0.0f64;
        for &y in &ys {
            let (lhs, rhs) = darboux_flip(sp, n, y)?;
            flip = flip.max((lhs - rhs).abs() / rhs.abs().max(1.0));
        }
        let m = r.l1.max(r.h1).max(flip);
        worst = worst.max(m);
        lines.push(line(
            "susy",
            "eigen_level",
            Some(n),
            m < SUSY_TOL,
            format!("L1 {:.2e}, H1 {:.2e}, reflection {flip:.2e}", r.l1, r.h1),
        ));
    }
    let tests: [&[i64]; 3] = [&[1], &[1, -2, 3], &[2, 0, -1, 0, 0, 1, 4]];
    let sqrt_ys = grid(50, GRID_MARGIN);
    for coeffs in tests {
        let f = PhiPoly::new(sp, &Poly::from_ints(coeffs));
        let r = square_root_residual(sp, &f, &sqrt_ys)?;
        worst = worst.max(r);
        lines.push(line("susy", "l1_squared_is_h1", None, r < SUSY_TOL, format!("{r:.2e} for {coeffs:?}")));
    }
    let u = |y: f64| potential(sp, y).expect("grid lies inside the well");
    let fact = factorization_check(&superpotential(sp), u, 0.0, &ys);
    let f_worst = fact.worst.iter().fold(0.0f64, |m, w| m.max(*w));
    lines.push(line("susy", "factorization", None, fact.holds, format!("{f_worst:.2e}")));
    let all_pass = lines.iter().all(|l| l.pass);
    lines.push(line("susy", "max_residual", None, all_pass, format!("{worst:.2e} at a = {}", sp.a())));
    Ok(lines)
}

pub fn write(lines: &[Line], format: Format, mut out: Box<dyn Write>) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["suite", "check", "n", "status", "detail"])?;
            for l in lines {
                let status = match l.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                let n = l.n.map(|n| n.to_string()).unwrap_or_default();
                w.write_record([l.suite, &l.check, &n, status, &l.detail])?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, lines).map_err(std::io::Error::other)?;
            writeln!(out)?;
            out.flush()?;
        }
    }
    Ok(())
}
