use std::io::Write;

use minusone::eigensolver::EigenSolution;
use minusone::littlejacobi::{weight_eval, ParamPair};
use minusone::susyqm::{grid, potential, wavefunction, SchrodingerParams, GRID_MARGIN};

use crate::CliError;

/// Eigenfunctions are sampled on `[-X_EDGE, X_EDGE]`; the series converge
/// on the open interval but slowly near the ends.
const X_EDGE: f64 = 0.95;

fn writer(out: Box<dyn Write>, header: &[String]) -> Result<csv::Writer<Box<dyn Write>>, CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    Ok(w)
}

fn row(w: &mut csv::Writer<Box<dyn Write>>, values: &[f64]) -> Result<(), CliError> {
    // `{}` on f64 is the shortest round-trip form with a '.' separator.
    w.write_record(values.iter().map(|v| v.to_string()))?;
    Ok(())
}

fn header(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Midpoints of `points` equal cells of `(-1, 1)`, so the endpoints are never hit.
pub fn weight(p: &ParamPair, points: usize, out: Box<dyn Write>) -> Result<(), CliError> {
    let mut w = writer(out, &header(&["x", "w"]))?;
    for i in 0..points {
        let x = -1.0 + (2 * i + 1) as f64 / points as f64;
        // |x|^α blows up at 0 when α < 0.
        let v = weight_eval(p, x).unwrap_or(f64::INFINITY);
        row(&mut w, &[x, v])?;
    }
    w.flush()?;
    Ok(())
}

pub fn eigenfunction(p: &ParamPair, lambda: f64, points: usize, out: Box<dyn Write>) -> Result<(), CliError> {
    let xs = linspace(-X_EDGE, X_EDGE, points);
    // rejects λ = 2(β+1), where f is (1-x²)^{-(β+1)/2} and g is not fixed by elimination
    let sol = EigenSolution::new(p, lambda)?;
    let mut w = writer(out, &header(&["x", "F", "f", "g", "residual"]))?;
    for x in xs {
        row(&mut w, &[x, sol.big_f(x), sol.f(x), sol.g(x), sol.ode_residual(x)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn wavefunctions(sp: &SchrodingerParams, max_level: usize, points: usize, out: Box<dyn Write>) -> Result<(), CliError> {
    let mut names = vec!["y".to_string()];
    names.extend((0..=max_level).map(|n| format!("psi_{n}")));
    let mut w = writer(out, &names)?;
    for y in grid(points, GRID_MARGIN) {
        let mut values = vec![y];
        for n in 0..=max_level {
            values.push(wavefunction(sp, n, y)?);
        }
        row(&mut w, &values)?;
    }
    w.flush()?;
    Ok(())
}

pub fn potential_curve(sp: &SchrodingerParams, points: usize, out: Box<dyn Write>) -> Result<(), CliError> {
    let mut w = writer(out, &header(&["y", "U"]))?;
    for y in grid(points, GRID_MARGIN) {
        row(&mut w, &[y, potential(sp, y)?])?;
    }
    w.flush()?;
    Ok(())
}

fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => (0..points).map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64).collect(),
    }
}
