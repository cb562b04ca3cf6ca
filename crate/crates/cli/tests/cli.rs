use std::process::{Command, Output};

use rootode_cli::Report;

fn rootode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootode")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> (Report, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json", "--no-timing"]);
    let o = rootode(&all);
    let report = Report::from_json(&stdout(&o)).expect("valid report");
    (report, o.status.code().expect("exit code"))
}

#[test]
fn derive_linear_cubic_coefficients() {
    let (r, code) = json(&["derive-linear", "x^3+x"]);
    assert_eq!(code, 0);
    assert_eq!(r.verb, "derive-linear");
    let b = &r.result["b"];
    assert_eq!(b[0], serde_json::json!(["4", "0", "27"]));
    assert_eq!(b[1], serde_json::json!(["0", "27"]));
    assert_eq!(b[2], serde_json::json!(["-3"]));
    assert_eq!(b[3], serde_json::json!([]));
    assert_eq!(r.result["kernel_dim"], 1);
}

#[test]
fn solve_cubic() {
    let (r, code) = json(&["solve", "x^3+x", "--q", "2"]);
    assert_eq!(code, 0);
    assert!((r.result["x"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(r.result["residual"].as_f64().unwrap() <= 1e-12);
    assert_eq!(r.result["closed_form"]["method"], "cardano");
}

#[test]
fn solve_accepts_fractions_and_negative_targets() {
    let (r, code) = json(&["solve", "x^2+x", "--q", "-3/16"]);
    assert_eq!(code, 0);
    assert!((r.result["x"].as_f64().unwrap() + 0.25).abs() < 1e-12);
}

#[test]
fn branch_point_is_a_domain_error() {
    let (r, code) = json(&["solve", "x^3-x", "--q", "1"]);
    assert_eq!(code, 2);
    assert_eq!(r.errors[0].code, "branch_point");
    let q_star = r.result["track"]["branch_point"].as_f64().unwrap();
    assert!((q_star - (4.0f64 / 27.0).sqrt()).abs() < 1e-10);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["solve", "x^2+1", "--q", "1"],
        vec!["derive-linear", "3x"],
        vec!["derive-linear", "x^2 + y"],
        vec!["solve", "x^2+x", "--q", "abc"],
    ] {
        let (r, code) = json(&args);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(r.status, rootode_cli::Status::UsageError);
    }
    assert_eq!(rootode(&["demo", "unknown"]).status.code(), Some(1));
    assert_eq!(rootode(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(rootode(&["solve", "x^2+x", "--q", "1", "--format", "latex"]).status.code(), Some(1));
    assert_eq!(rootode(&["--help"]).status.code(), Some(0));
}

#[test]
fn syntax_errors_report_a_column() {
    let (r, _) = json(&["derive-abel", "x^3 + 2*"]);
    assert_eq!(r.errors[0].code, "syntax");
    assert!(r.errors[0].message.contains("column 9"), "{}", r.errors[0].message);
}

#[test]
fn latex_renderings() {
    let o = rootode(&["derive-linear", "x^3+x", "--format", "latex"]);
    assert_eq!(stdout(&o), "(27q^{2}+4)x''+27qx'-3x=0\n");
    let o = rootode(&["derive-abel", "x^2+x", "--format", "latex"]);
    assert_eq!(stdout(&o), "x'=\\frac{2}{4q+1}x+\\frac{1}{4q+1}\n");
    let o = rootode(&["derive-linear", "x^3+x^2+x", "--format", "latex"]);
    assert_eq!(stdout(&o), "(27q^{2}+14q+3)x''+(27q+7)x'-3x-1=0\n");
}

#[test]
fn every_demo_passes() {
    for name in ["babylonian", "cardano", "quartic23", "betti", "hypergeom", "remark5"] {
        let (r, code) = json(&["demo", name]);
        assert_eq!(code, 0, "{name}: {:#}", r.result);
        assert_eq!(r.result["passed"], r.result["total"]);
    }
}

#[test]
fn betti_demo_reports_small_differences() {
    let (r, _) = json(&["demo", "betti"]);
    let checks = r.result["checks"].as_array().unwrap();
    let diffs: Vec<f64> = checks.iter().filter_map(|c| c["detail"]["diff"].as_f64()).collect();
    assert_eq!(diffs.len(), 3);
    assert!(diffs.iter().all(|&d| d <= 1e-8));
}

#[test]
fn identity_checks() {
    let (r, code) = json(&["check", "x^4-2x^3+2x^2-x", "--q", "1/4", "--weight", "-2"]);
    assert_eq!(code, 0);
    assert!(r.result["diff"].as_f64().unwrap() <= 1e-8);
    let (r, code) = json(&["check", "x^4+x", "--q", "0.3", "--weight", "1+t", "--kind", "rational"]);
    assert_eq!(code, 0, "{:#}", r.result);
    let (r, code) = json(&["check", "x^5+5x^3", "--q", "2", "--weight", "5t", "--degenerate"]);
    assert_eq!(code, 0);
    assert_eq!(r.result["root_source"], "sturm");
    let (r, code) = json(&["check", "x^3+x", "--q", "1", "--weight", "t"]);
    assert_eq!(code, 2);
    assert_eq!(r.errors[0].code, "weight_vanishes_at_zero");
}

#[test]
fn series_residual_vanishes() {
    let (r, code) = json(&["series", "x^4+x", "--order", "14"]);
    assert_eq!(code, 0);
    assert_eq!(r.result["residual"]["zero"], true);
    assert_eq!(r.result["coeffs"][4], "-1");
}

#[test]
fn output_is_deterministic_and_round_trips() {
    for args in [
        ["derive-linear", "x^5+x"],
        ["discriminant", "x^5+5x^3"],
        ["derive-abel", "x^4-2x^3+2x^2-x"],
        ["demo", "hypergeom"],
    ] {
        let mut all = args.to_vec();
        all.extend(["--format", "json", "--no-timing"]);
        let a = stdout(&rootode(&all));
        let b = stdout(&rootode(&all));
        assert_eq!(a, b);
        let report = Report::from_json(&a).unwrap();
        assert_eq!(report.to_json() + "\n", a);
    }
}

#[test]
fn timing_is_reported_unless_disabled() {
    let o = rootode(&["discriminant", "x^2+x", "--format", "json"]);
    assert!(Report::from_json(&stdout(&o)).unwrap().timing_ms.is_some());
    let o = rootode(&["discriminant", "x^2+x", "--format", "text", "--no-timing"]);
    assert!(!stdout(&o).contains("timing_ms"));
}
