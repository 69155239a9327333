//! End-to-end tests against the compiled binary: output values, formats,
//! determinism, and the exit-code contract.

use std::process::Command;

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bigm1"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn eval_prints_exact_rationals() {
    let (code, stdout, _) = run(&[
        "eval", "--alpha", "1", "--beta", "1", "--c", "1/2", "--n", "1", "--x", "0",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "-1/4");

    let (_, stdout, _) = run(&["eval", "--n", "0", "--x", "17/3"]);
    assert_eq!(stdout.trim(), "1");

    let (_, stdout, _) = run(&["eval", "--n", "2", "--x", "1/2"]);
    assert_eq!(stdout.trim(), "-5/12");

    // P_2 = x^2 - x/6 - 7/12, so P_2(-1/2) = -1/4
    let (_, stdout, _) = run(&["eval", "--n", "2", "--x", "-1/2"]);
    assert_eq!(stdout.trim(), "-1/4");
}

#[test]
fn eval_rejects_bad_input_with_exit_2() {
    let (code, _, stderr) = run(&["eval", "--n", "1", "--x", "1.5"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("parse error"), "stderr: {stderr}");

    let (code, _, _) = run(&["eval", "--n", "1"]); // missing --x
    assert_eq!(code, Some(2));
}

#[test]
fn table_json_and_csv_agree_and_are_deterministic() {
    let args = ["table", "--nmax", "2"];
    let (code, json_text, _) = run(&args);
    assert_eq!(code, Some(0));
    let rows: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    let row1 = &rows[1];
    assert_eq!(row1["n"], 1);
    assert_eq!(row1["lambda"], "-8");
    assert_eq!(row1["u"], "9/16");
    assert_eq!(row1["nu"], "3");
    assert_eq!(row1["kappa"], "-6");
    assert_eq!(rows[0]["u"], serde_json::Value::Null);
    assert_eq!(rows[0]["b"], "1/4");
    assert_eq!(rows[0]["lambda"], "0");
    assert_eq!(rows[0]["nu"], "0");
    assert_eq!(rows[0]["kappa"], "-2");

    let (_, csv_text, _) = run(&["table", "--nmax", "2", "--format", "csv"]);
    assert!(csv_text.contains("1,-8,-1/12,9/16,3,-6,-1/4;1"));

    // byte-identical across runs
    let (_, again, _) = run(&args);
    assert_eq!(json_text, again);
}

#[test]
fn verify_passes_and_records_config() {
    let (code, stdout, _) = run(&[
        "verify", "--nmax", "6", "--samples", "3", "--seed", "11",
    ]);
    assert_eq!(code, Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows[0]["identity"], "config");
    assert_eq!(rows[0]["detail"], "nmax=6 samples=3 seed=11");
    assert!(rows.len() > 20);
    for row in rows {
        assert_eq!(row["residual_zero"], true, "row: {row}");
    }
    // 3 sampled parameter triples produce entries beyond the base point
    let alphas: std::collections::BTreeSet<String> = rows
        .iter()
        .map(|r| r["params"]["alpha"].as_str().unwrap().to_string())
        .collect();
    assert!(alphas.len() >= 3);
}

#[test]
fn verify_degenerate_parameters_exit_2() {
    let (code, _, stderr) = run(&["verify", "--alpha", "-3", "--beta", "1", "--nmax", "4"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("degenerate parameters"), "stderr: {stderr}");
}

#[test]
fn ladder_reports_hahn_and_skips_degenerate_raising() {
    let (code, stdout, _) = run(&["ladder", "--nmax", "4"]);
    assert_eq!(code, Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let rows = rows.as_array().unwrap();
    let lowering: Vec<_> = rows.iter().filter(|r| r["shift"] == 2).collect();
    assert_eq!(lowering.len(), 4);
    for r in &lowering {
        assert_eq!(r["exact_match"], true);
    }
    // alpha-2 family is degenerate at (1,1): every raising row is a skip note
    let raising: Vec<_> = rows.iter().filter(|r| r["shift"] == -2).collect();
    assert_eq!(raising.len(), 5);
    for r in &raising {
        assert!(r["note"].as_str().unwrap().starts_with("skipped"));
    }

    // with alpha = 3 the raising rows verify exactly
    let (_, stdout, _) = run(&["ladder", "--alpha", "3", "--nmax", "4"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    for r in rows.as_array().unwrap() {
        assert_eq!(r["exact_match"], true, "row: {r}");
    }
}

#[test]
fn christoffel_double_transform_matches_shifted_table() {
    let (code, stdout, _) = run(&["christoffel", "--nmax", "5"]);
    assert_eq!(code, Some(0));
    let transformed: serde_json::Value = serde_json::from_str(&stdout).unwrap();

    let (_, table, _) = run(&["table", "--alpha", "3", "--beta", "1", "--c", "1/2", "--nmax", "5"]);
    let table: serde_json::Value = serde_json::from_str(&table).unwrap();

    for n in 0..=5 {
        assert_eq!(
            transformed[n]["coeffs"], table[n]["coeffs"],
            "degree {n} differs"
        );
    }
}

#[test]
fn christoffel_reads_sequences_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seq.json");
    std::fs::write(
        &path,
        r#"[{"n":0,"coeffs":["1"]},{"n":1,"coeffs":["-1","1"]},{"n":2,"coeffs":["1/2","-2","1"]}]"#,
    )
    .unwrap();
    let (code, stdout, _) = run(&[
        "christoffel",
        "--input",
        path.to_str().unwrap(),
        "--nodes",
        "2",
    ]);
    assert_eq!(code, Some(0), "stdout: {stdout}");
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    // Q_0 = (P_1 - (P_1(2)/P_0(2)) P_0)/(x-2) = 1
    assert_eq!(rows[0]["coeffs"], serde_json::json!(["1"]));
    assert_eq!(rows.as_array().unwrap().len(), 2);

    // a node where P_1 vanishes is a config error
    let (code, _, stderr) = run(&[
        "christoffel",
        "--input",
        path.to_str().unwrap(),
        "--nodes",
        "1",
    ]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("vanishes at the node"), "stderr: {stderr}");
}

#[test]
fn quad_one_point_rule_and_digit_control() {
    let (code, stdout, _) = run(&["quad", "--points", "1", "--digits", "6"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["mass"], 0.375);
    assert_eq!(v["nodes"], serde_json::json!([0.25]));
    assert_eq!(v["weights"], serde_json::json!([0.375]));

    let (_, csv, _) = run(&["quad", "--points", "2", "--digits", "6", "--format", "csv"]);
    assert!(csv.starts_with("# mass = 3.75000e-1\nnode,weight\n"), "csv: {csv}");
    assert_eq!(csv.lines().count(), 4);

    // fractional parameters fall back to the numeric mass
    let (code, stdout, _) = run(&[
        "quad", "--alpha", "1/2", "--beta", "1/2", "--c", "1/2", "--points", "4",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let mass = v["mass"].as_f64().unwrap();
    assert!((mass - 0.733708053850165596).abs() < 1e-9);
}

#[test]
fn output_goes_to_file_with_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let (code, stdout, _) = run(&[
        "table",
        "--nmax",
        "1",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("n,lambda,b,u,nu,kappa,coeffs\n"));
}
