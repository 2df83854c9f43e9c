//! End-to-end tests of the command-line binary: exit codes, output formats,
//! and the worked examples the interface documents.

use std::process::{Command, Output};

use eulerleg::cli::{EvalOutput, OrthoOutput};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerleg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn out(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

fn err(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn table_lists_the_polynomials() {
    let o = run(&["table", "--max-n", "7"]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert!(text.contains("P_0(t) = 1"));
    assert!(text.contains("P_6(t) = (231t^6 - 315t^4 + 105t^2 - 5)/16"));
    assert!(text.contains("P_7(t) = (429t^7 - 693t^5 + 315t^3 - 35t)/16"));
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn table_json_rows() {
    let o = run(&["table", "--max-n", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rows: serde_json::Value = serde_json::from_str(&out(&o)).expect("valid json");
    assert_eq!(rows.as_array().map(Vec::len), Some(3));
    assert_eq!(rows[2]["n"], 2);
    assert_eq!(rows[2]["polynomial"], "(3t^2 - 1)/2");
}

#[test]
fn table_rejects_large_n() {
    let o = run(&["table", "--max-n", "51"]);
    assert_eq!(code(&o), 2);
    assert!(err(&o).starts_with("error:"));
}

#[test]
fn eval_rational_t_runs_every_method() {
    let o = run(&["eval", "--n", "5", "--t", "3/2"]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert!(text.contains("3.3082031250000000e1"));
    assert!(text.contains("est error exact"));
    assert!(text.contains("over 7 values"));
    assert!(text.trim_end().ends_with("OK"));
}

#[test]
fn eval_decimal_t_skips_exact_routes() {
    let o = run(&["eval", "--n", "4", "--t", "0.5"]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert!(text.contains("requires a rational t literal"));
    assert!(text.contains("requires t > 1"));
    assert!(text.contains("over 2 values"));
}

#[test]
fn eval_negative_t_with_equals_sign() {
    let o = run(&["eval", "--n", "5", "--t=-1"]);
    assert_eq!(code(&o), 0);
    assert!(out(&o).contains("-1.0000000000000000e0"));
}

#[test]
fn eval_csv_schema_includes_skip_reason() {
    let o = run(&["eval", "--n", "4", "--t", "1/2", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("method,n,t,value,est_error"));
    assert!(text.contains("recurrence,4,1/2,-2.8906250000000000e-1,exact"));
    assert!(text.contains("e606,4,1/2,,\"skipped: requires t > 1, got 0.5\""));
}

#[test]
fn eval_json_round_trip() {
    let o = run(&["eval", "--n", "2", "--t", "3/2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let parsed: EvalOutput = serde_json::from_str(&out(&o)).expect("valid json");
    assert!(parsed.pass);
    assert_eq!(parsed.reports.len(), 7);
    assert_eq!(parsed.comparison.values["recurrence"], 2.875);
    assert!(parsed.comparison.max_pairwise_deviation < 1e-9);
}

#[test]
fn eval_method_subset() {
    let o = run(&[
        "eval",
        "--n",
        "3",
        "--t",
        "2",
        "--methods",
        "recurrence,gf-series",
    ]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert!(text.contains("over 2 values"));
    assert!(!text.contains("laplace-pos"));
}

#[test]
fn eval_unreachable_tolerance_is_a_hard_failure() {
    let o = run(&["eval", "--n", "10", "--t", "1/2", "--tol", "1e-15"]);
    assert_eq!(code(&o), 1);
    let text = out(&o);
    assert!(text.contains("tolerance not reached"));
    assert!(text.trim_end().ends_with("FAIL"));
}

#[test]
fn eval_rejects_malformed_t() {
    let o = run(&["eval", "--n", "2", "--t", "abc"]);
    assert_eq!(code(&o), 2);
    assert!(err(&o).contains("cannot parse"));
    let o = run(&["eval", "--n", "2", "--t", "1/0"]);
    assert_eq!(code(&o), 2);
    assert!(err(&o).contains("zero denominator"));
}

#[test]
fn verify_single_suite_passes() {
    let o = run(&["verify", "--suite", "recurrence"]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert!(text.contains("[ ok ]"));
    assert!(!text.contains("[FAIL]"));
    assert!(text.contains("summary: 5/5 checks passed"));
}

#[test]
fn verify_csv_schema() {
    let o = run(&["verify", "--suite", "section22", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert_eq!(
        text.lines().next(),
        Some("suite,check,points,max_residual,tol,pass,worst")
    );
    assert!(text.lines().skip(1).all(|l| l.contains("section22")));
}

#[test]
fn verify_json_reports_every_check_passing() {
    let o = run(&["verify", "--suite", "e606", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rows: serde_json::Value = serde_json::from_str(&out(&o)).expect("valid json");
    let rows = rows.as_array().expect("array");
    assert!(!rows.is_empty());
    for row in rows {
        assert_eq!(row["suite"], "e606");
        assert_eq!(row["pass"], true);
        assert!(row["points"].as_u64().unwrap() > 0);
        assert!(row["max_residual"].as_f64().unwrap() < row["tol"].as_f64().unwrap());
    }
}

#[test]
fn verify_unreachable_tolerance_exits_one() {
    let o = run(&["verify", "--suite", "jacobi", "--tol", "1e-16"]);
    assert_eq!(code(&o), 1);
    assert!(out(&o).contains("[FAIL]"));
}

#[test]
fn ortho_reports_moment_diagonal() {
    let o = run(&["ortho", "--max-n", "1", "--nodes", "8", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let parsed: OrthoOutput = serde_json::from_str(&out(&o)).expect("valid json");
    assert!(parsed.pass);
    assert!((parsed.matrix[0][0] - 2.0).abs() < 1e-12);
    assert!((parsed.matrix[1][1] - 2.0 / 3.0).abs() < 1e-12);
    assert!(parsed.max_off_diagonal < 1e-12);
}

#[test]
fn ortho_validates_node_count() {
    let o = run(&["ortho", "--max-n", "8", "--nodes", "8"]);
    assert_eq!(code(&o), 2);
    assert!(err(&o).contains("at least max-n + 1"));
    let o = run(&["ortho", "--max-n", "8", "--nodes", "5000"]);
    assert_eq!(code(&o), 2);
    assert!(err(&o).contains("at most 4096"));
}

#[test]
fn gf_worked_coefficient_rows() {
    let o = run(&["gf", "--t", "2", "--count", "3"]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert!(text.contains("k=0: 1 (direct 1)"));
    assert!(text.contains("k=1: 2 (direct 2)"));
    assert!(text.contains("k=2: 11/2 (direct 11/2)"));
    assert!(text.contains("3 coefficients, all match"));

    let o = run(&["gf", "--t", "0", "--count", "4"]);
    assert!(out(&o).contains("k=2: -1/2"));

    let o = run(&["gf", "--t", "1", "--count", "5"]);
    assert!(out(&o).contains("5 coefficients, all match"));
}

#[test]
fn gf_csv_schema() {
    let o = run(&["gf", "--t", "2", "--count", "2", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert_eq!(text.lines().next(), Some("k,coefficient,reference,matches"));
    assert!(text.contains("1,2,2,true"));
}

#[test]
fn gf_requires_rational_t() {
    let o = run(&["gf", "--t", "0.5", "--count", "3"]);
    assert_eq!(code(&o), 2);
    assert!(err(&o).contains("rational t literal"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let o = run(&["table", "--bogus"]);
    assert_eq!(code(&o), 2);
}
