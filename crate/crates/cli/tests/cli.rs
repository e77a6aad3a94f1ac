use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minusone")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn table_row_for_legendre_like_case() {
    let o = run(&["table", "--alpha", "0", "--beta", "0", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[1][0], "2");
    assert_eq!(&rows[1][4], "-1/4,-1/2,1");
}

#[test]
fn table_has_n_rows_and_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = run(&["table", "--alpha", "1/2", "--beta", "3/2", "--n", "10", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["n", "u_n", "b_n", "lambda_n", "coeffs"]);
    assert_eq!(rdr.records().count(), 10);
}

#[test]
fn table_json() {
    let o = run(&["table", "--alpha", "0", "--beta", "0", "--n", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["rows"][0]["coeffs"], serde_json::json!(["-1/2", "1"]));
    assert_eq!(doc["rows"][0]["u_n"], "1/4");
}

#[test]
fn bad_parameters_exit_2() {
    let o = run(&["table", "--alpha", "-2", "--beta", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alpha must be > -1"));
    assert_eq!(run(&["table", "--alpha", "x/y"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "raising", "--beta", "1/2"]).status.code(), Some(2));
    assert_eq!(run(&["sample", "wavefunction", "--a", "1/2"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let a = run(&["verify", "--suite", "all", "--n", "6"]);
    let b = run(&["verify", "--suite", "all", "--n", "6"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains("FAIL"));
    let suites: Vec<String> =
        csv::Reader::from_reader(text.as_bytes()).records().map(|r| r.unwrap()[0].to_string()).collect();
    let mut order = suites.clone();
    order.dedup();
    assert_eq!(
        order,
        ["orthogonality", "eigen", "explicit", "dunkl", "raising", "transforms", "aw", "prop2", "qlimit", "susy"]
    );
}

#[test]
fn aw_suite_reports_sign() {
    let o = run(&["verify", "--suite", "aw", "--alpha", "1/2", "--beta", "3/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("omega3 = -1/2 (sign -)"));
}

#[test]
fn susy_suite_reports_max_residual() {
    let o = run(&["verify", "--suite", "susy", "--a", "3/2", "--levels", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let last = lines.as_array().unwrap().last().unwrap();
    assert_eq!(last["check"], "max_residual");
    assert_eq!(last["status"], "PASS");
}

#[test]
fn qlimit_flags_wrong_expected_ratio() {
    // Errors are linear in eps, so a 1e-3 / 1e-4 pair gives ratios near 10.
    assert_eq!(run(&["verify", "--suite", "qlimit", "--n", "4"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "qlimit", "--eps", "1e-4,1e-3"]).status.code(), Some(2));
}

#[test]
fn wavefunction_sample_shape() {
    let o = run(&["sample", "wavefunction", "--a", "3/2", "--n", "3", "--points", "101"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.headers().unwrap(), vec!["y", "psi_0", "psi_1", "psi_2", "psi_3"]);
    let rows: Vec<Vec<f64>> =
        rdr.records().map(|r| r.unwrap().iter().map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 101);
    // ψ_0 has no nodes
    assert!(rows.iter().all(|r| r[1] > 0.0));
}

#[test]
fn eigenfunction_sample_residuals() {
    let o = run(&["sample", "eigenfunction", "--alpha", "0", "--beta", "0", "--lambda", "1.3", "--points", "17"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.headers().unwrap(), vec!["x", "F", "f", "g", "residual"]);
    for r in rdr.records() {
        let v: Vec<f64> = r.unwrap().iter().map(|s| s.parse().unwrap()).collect();
        assert!((v[1] - v[2] - v[3]).abs() < 1e-12);
        if v[0].abs() <= 0.8 {
            assert!(v[4] < 1e-10, "residual {} at x = {}", v[4], v[0]);
        }
    }
    // 2(β+1) is the elementary case, outside the general solution
    let o = run(&["sample", "eigenfunction", "--alpha", "0", "--beta", "0", "--lambda", "2", "--points", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn weight_and_potential_samples_are_plain_decimal() {
    for target in ["weight", "potential"] {
        let o = run(&["sample", target, "--points", "8"]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        assert_eq!(text.lines().count(), 9);
        for line in text.lines().skip(1) {
            for field in line.split(',') {
                assert!(field.parse::<f64>().unwrap().is_finite(), "{field}");
            }
        }
    }
}
