use std::io::Write;

use minusone::littlejacobi::{eigenvalue, generate_family, recurrence_b, recurrence_u, ParamPair};

use crate::{CliError, Format};

pub fn write(p: &ParamPair, max_degree: usize, format: Format, mut out: Box<dyn Write>) -> Result<(), CliError> {
    let family = generate_family(p, max_degree);
    let rows = (1..=max_degree).map(|n| {
        let u = recurrence_u(p, n).expect("n >= 1").to_string();
        (n, u, recurrence_b(p, n).to_string(), eigenvalue(p, n).to_string(), family[n].to_strings())
    });
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "u_n", "b_n", "lambda_n", "coeffs"])?;
            for (n, u, b, lambda, coeffs) in rows {
                w.write_record([n.to_string(), u, b, lambda, coeffs.join(",")])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .map(|(n, u, b, lambda, coeffs)| {
                    serde_json::json!({ "n": n, "u_n": u, "b_n": b, "lambda_n": lambda, "coeffs": coeffs })
                })
                .collect();
            let doc = serde_json::json!({ "alpha": p.alpha().to_string(), "beta": p.beta().to_string(), "rows": rows });
            serde_json::to_writer_pretty(&mut out, &doc).map_err(std::io::Error::other)?;
            writeln!(out)?;
            out.flush()?;
        }
    }
    Ok(())
}
