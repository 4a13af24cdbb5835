//! Golden invocations of the `polybe` binary: formats, exit codes,
//! report determinism.

use std::path::Path;
use std::process::{Command, Output};
use std::str::FromStr;

use polybe::Rational;

fn polybe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polybe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn list_families_prints_catalog() {
    let out = polybe(&["list-families"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 11);
    let mpe = rows.iter().find(|r| r.contains("multi-poly-euler")).unwrap();
    assert!(mpe.contains("eq1.11"));
    let hl = rows.iter().find(|r| r.contains("hl-multi-pb")).unwrap();
    assert!(hl.contains("eq5.4"));
}

#[test]
fn compute_poly_bernoulli_csv() {
    let out = polybe(&["compute", "--family", "poly-bernoulli", "--k", "2", "--n-max", "6", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,value"));
    let rows: Vec<&str> = lines.filter(|l| !l.is_empty()).collect();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0], "0,1");
    assert_eq!(rows[1], "1,1/4");
}

#[test]
fn compute_csv_round_trips_exactly() {
    let out = polybe(&["compute", "--family", "poly-bernoulli", "--k", "-2", "--n-max", "8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let parsed: Vec<Rational> = text
        .lines()
        .skip(1)
        .filter(|l| !l.is_empty())
        .map(|l| Rational::from_str(l.split_once(',').unwrap().1).unwrap())
        .collect();
    assert_eq!(parsed, polybe::families::poly_bernoulli(-2, 8));
}

#[test]
fn compute_multi_poly_euler_vanishing_order() {
    let out = polybe(&[
        "compute", "--family", "multi-poly-euler", "--k", "1,1", "--alpha", "1", "--beta", "0",
        "--gamma", "1", "--x", "1/2", "--n-max", "5",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows[0], "0,0");
    assert_eq!(rows[1], "1,0");
    assert_ne!(rows[2], "2,0");
}

#[test]
fn compute_hl_multi_pb_regression_row() {
    // constant term from the all-zero chain: 1/((1)^1 (2)^2) = 1/4
    let out = polybe(&["compute", "--family", "hl-multi-pb", "--k", "1,2", "--a", "2", "--x", "0", "--n-max", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).lines().nth(1), Some("0,1/4"));
}

#[test]
fn compute_symbolic_x_renders_coefficients_ascending() {
    let out = polybe(&["compute", "--family", "poly-euler", "--k", "1", "--x", "sym", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    // E_2^{(1)}(x) = 2 E_1(x) = -1 + 2x
    assert_eq!(text.lines().nth(3), Some("2,-1 2"));
}

#[test]
fn compute_latex_emits_tabular_body_only() {
    let out = polybe(&["compute", "--family", "poly-bernoulli", "--k", "1", "--n-max", "2", "--format", "latex"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("0 & $1$ \\\\"));
    assert!(!text.contains("begin{tabular}"));
}

#[test]
fn compute_json_format() {
    let out = polybe(&["compute", "--family", "poly-bernoulli", "--k", "1", "--n-max", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["family"], "poly-bernoulli");
    assert_eq!(doc["values"][0]["value"], "1");
}

#[test]
fn exit_codes_are_distinct_per_failure_class() {
    // unknown family: usage error
    let out = polybe(&["compute", "--family", "no-such-family"]);
    assert_eq!(exit_code(&out), 64);
    // invalid rational syntax
    let out = polybe(&["compute", "--family", "poly-euler", "--x", "abc"]);
    assert_eq!(exit_code(&out), 65);
    // zero denominator
    let out = polybe(&["compute", "--family", "poly-euler", "--x", "1/0"]);
    assert_eq!(exit_code(&out), 65);
    // pole parameter
    let out = polybe(&["compute", "--family", "hurwitz-pb", "--k", "2", "--a", "-2"]);
    assert_eq!(exit_code(&out), 66);
    // degenerate parameter (ln a + ln b = 0)
    let out = polybe(&["compute", "--family", "multi-poly-bernoulli", "--k", "1", "--alpha", "1", "--beta", "-1"]);
    assert_eq!(exit_code(&out), 66);
    // depth mismatch for a single-index family
    let out = polybe(&["compute", "--family", "poly-bernoulli", "--k", "1,2"]);
    assert_eq!(exit_code(&out), 64);
}

#[test]
fn verify_unknown_id_is_usage_error() {
    let out = polybe(&["verify", "--id", "nonexistent"]);
    assert_eq!(exit_code(&out), 64);
}

#[test]
fn verify_single_check_report() {
    let out = polybe(&["verify", "--id", "thm5.1", "--n-max", "4"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = doc["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["id"], "thm5.1");
    }
    assert!(doc["summary"]["pass"].as_u64().unwrap() > 0);
    assert_eq!(doc["summary"]["fail"], 0);
}

#[test]
fn verify_reports_are_byte_identical_across_runs_and_modes() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, extra: &[&str]| -> Vec<u8> {
        let path = dir.path().join(name);
        let mut args = vec!["verify", "--all", "--n-max", "5", "--order", "10"];
        args.extend_from_slice(extra);
        args.push("--out");
        args.push(path.to_str().unwrap());
        let out = polybe(&args);
        assert_eq!(exit_code(&out), 0, "verify run failed");
        std::fs::read(&path).unwrap()
    };
    let first = run("r1.json", &[]);
    let second = run("r2.json", &[]);
    let serial = run("r3.json", &["--serial"]);
    assert_eq!(first, second);
    assert_eq!(first, serial);
}

#[test]
fn verify_writes_report_file_with_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = polybe(&["verify", "--id", "eq1.4", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(doc["summary"]["pass"].as_u64().unwrap() > 0);
    assert!(Path::new(&path).exists());
}
