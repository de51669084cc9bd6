//! End-to-end tests of the `catalan-log` binary: output bytes, JSON
//! round-trips, exit codes.

use std::process::{Command, Output};

use catalan_log::cli::{CoeffsJson, VerifyJson};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan-log"))
        .args(args)
        .output()
        .expect("failed to spawn catalan-log")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn coeffs_catalan_csv_bytes() {
    let out = run(&["coeffs", "--kind", "catalan", "--order", "5", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,coefficient\n0,1\n1,1\n2,2\n3,5\n4,14\n5,42\n");
}

#[test]
fn coeffs_log_pow_stirling_plain() {
    let out = run(&["coeffs", "--kind", "log-pow-stirling", "--p", "2", "--order", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0: 0\n1: 0\n2: 1\n3: 3\n");
}

#[test]
fn coeffs_fuss_catalan_lambda_one() {
    let out = run(&["coeffs", "--kind", "fuss-catalan", "--lambda", "1", "--order", "3", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,coefficient\n0,1\n1,1\n2,1\n3,1\n");
}

#[test]
fn coeffs_u_power_uses_p_as_exponent() {
    let out = run(&["coeffs", "--kind", "u-power", "--p", "2", "--order", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0: 0\n1: 0\n2: 1\n3: 4\n4: 14\n");
}

#[test]
fn coeffs_json_roundtrips_byte_identically() {
    let out = run(&["coeffs", "--kind", "log-pow-direct", "--p", "1", "--order", "3", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed: CoeffsJson = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), text.trim_end());
    assert_eq!(parsed.kind, "log-pow-direct");
    assert_eq!(parsed.p, Some(1));
    assert_eq!(parsed.lambda, Some(2));
    assert_eq!(parsed.coefficients, vec!["0", "1", "3/2", "10/3"]);
}

#[test]
fn coeffs_json_omits_irrelevant_parameters() {
    let out = run(&["coeffs", "--kind", "catalan", "--order", "2", "--format", "json"]);
    let text = stdout(&out);
    assert_eq!(
        text.trim_end(),
        r#"{"kind":"catalan","order":2,"coefficients":["1","1","2"]}"#
    );
}

#[test]
fn coeffs_knuth_rhs_matches_log_squared() {
    let knuth = run(&["coeffs", "--kind", "knuth-rhs", "--order", "12", "--format", "csv"]);
    let direct = run(&["coeffs", "--kind", "log-pow-direct", "--p", "2", "--order", "12", "--format", "csv"]);
    assert_eq!(stdout(&knuth), stdout(&direct));
}

#[test]
fn coeffs_rejects_bad_arguments() {
    // harmonic route is lambda=2 only
    let out = run(&["coeffs", "--kind", "log-pow-harmonic", "--lambda", "3", "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());

    // ... and needs p >= 1
    let out = run(&["coeffs", "--kind", "log-pow-harmonic", "--p", "0", "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["coeffs", "--kind", "catalan", "--lambda", "0", "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["coeffs", "--kind", "no-such-series"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn coeffs_harmonic_route_works_for_catalan_lambda() {
    let harmonic = run(&["coeffs", "--kind", "log-pow-harmonic", "--p", "3", "--order", "10", "--format", "csv"]);
    assert!(harmonic.status.success());
    let direct = run(&["coeffs", "--kind", "log-pow-direct", "--p", "3", "--order", "10", "--format", "csv"]);
    assert_eq!(stdout(&harmonic), stdout(&direct));
}

#[test]
fn verify_all_sweep_exits_zero() {
    let out = run(&[
        "verify", "--suite", "all", "--pmax", "4", "--lambda", "1,2,3", "--order", "50",
    ]);
    assert!(out.status.success(), "stdout:\n{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|line| line.starts_with("PASS ")), "{text}");
}

#[test]
fn verify_alternating_full_range() {
    let out = run(&["verify", "--suite", "alternating", "--nmax", "500"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS alternating-sum (2<=n<=500)\n");
}

#[test]
fn verify_grunberg_sweep() {
    let out = run(&["verify", "--suite", "grunberg", "--nmax", "30", "--rmax", "8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS grunberg-vs-triangle (n<=30, r<=8)\n");
}

#[test]
fn verify_json_roundtrips_and_reports_pass() {
    let out = run(&[
        "verify", "--suite", "routes", "--pmax", "3", "--order", "15", "--nmax", "15", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed: VerifyJson = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), text.trim_end());
    assert_eq!(parsed.suite, "routes");
    assert_eq!(parsed.reports.len(), 2);
    assert!(parsed.reports.iter().all(|r| r.passed && r.first_failure.is_none()));
}

#[test]
fn verify_failure_json_contains_exact_values() {
    let out = run(&[
        "verify", "--suite", "routes", "--pmax", "3", "--order", "12", "--nmax", "12",
        "--corrupt-stirling", "3,2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let parsed: VerifyJson = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), text.trim_end());
    let failed: Vec<_> = parsed.reports.iter().filter(|r| !r.passed).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].name, "direct-vs-stirling");
    let failure = failed[0].first_failure.as_ref().unwrap();
    assert_eq!(failure.params, "lambda=2, p=2, n=3");
    // Exact values: true coefficient 3, corrupted sum 3 - 1/3·C(6,0) = 8/3.
    assert_eq!(failure.lhs, "3");
    assert_eq!(failure.rhs, "8/3");
}

#[test]
fn verify_output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify", "--suite", "functional-equation", "--lambda", "1,2,4", "--order", "20",
        "--format", "json", "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let file_bytes = std::fs::read(&path).unwrap();
    assert_eq!(file_bytes, out.stdout);
}

#[test]
fn coeffs_output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("coeffs.csv");
    let out = run(&[
        "coeffs", "--kind", "catalan", "--order", "5", "--format", "csv",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let file_bytes = std::fs::read(&path).unwrap();
    assert_eq!(file_bytes, out.stdout);
}

#[test]
fn verify_rejects_bad_arguments() {
    let out = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", "--lambda", "0,2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", "--nmax", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", "--corrupt-stirling", "banana"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_code_zero_iff_all_reports_pass() {
    // Same sweep, toggled only by the corruption flag.
    let ok = run(&["verify", "--suite", "knuth", "--order", "20", "--nmax", "20"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("PASS knuth-p2"));

    let bad = run(&[
        "verify", "--suite", "knuth", "--order", "20", "--nmax", "20",
        "--corrupt-stirling", "4,2",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL knuth-p2"));
}
