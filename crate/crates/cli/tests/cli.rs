use std::process::{Command, Output};

use serde_json::Value;

fn affcohom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affcohom")).args(args).output().expect("binary runs")
}

fn strip_timing(mut v: Value) -> Value {
    for r in v.as_array_mut().expect("report array") {
        r.as_object_mut().expect("report object").remove("runtime_ms");
    }
    v
}

#[test]
fn run_single_experiment_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("prettr.json");
    let out = affcohom(&["run", "prettr", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let r = &v[0];
    assert_eq!(r["name"], "prettr");
    assert_eq!(r["pass"], true);
    assert_eq!(r["expected"]["provenance"], "PAPER");
    assert_eq!(r["computed"]["p"], "1/1");
    assert_eq!(r["computed"]["q"], "1/2");
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let a = affcohom(&["run", "les-exactness"]);
    let b = affcohom(&["run", "les-exactness"]);
    let parse = |o: &Output| strip_timing(serde_json::from_slice(&o.stdout).unwrap());
    assert_eq!(parse(&a), parse(&b));
}

#[test]
fn invalid_parameters_exit_two() {
    for args in [
        &["run", "prettr", "--m", "5"][..],
        &["run", "prettr", "--degree", "9"],
        &["run", "prettr", "--window", "2,5"],
        &["run", "no-such-experiment"],
        &["run-all", "--window", "0"],
    ] {
        let out = affcohom(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn config_file_is_read_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("config.json");
    std::fs::write(&cfg, r#"{"m": 2, "degree": 2, "window": [0, 4]}"#).unwrap();
    let out = affcohom(&["run", "h0-vanish", "--config", cfg.to_str().unwrap(), "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["params"]["degree"], 3);
    assert_eq!(v[0]["params"]["window"], serde_json::json!([0, 4]));
    std::fs::write(&cfg, r#"{"m": 2, "bogus": 1}"#).unwrap();
    assert_eq!(affcohom(&["run-all", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn report_renders_saved_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let out = affcohom(&["run", "h0-vanish", "--out", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let input = json.to_str().unwrap();
    let md = affcohom(&["report", "--format", "md", "--input", input]);
    assert!(String::from_utf8_lossy(&md.stdout).contains("| h0-vanish | pass |"));
    let csv = affcohom(&["report", "--format", "csv", "--input", input]);
    assert!(String::from_utf8_lossy(&csv.stdout).starts_with("name,pass,provenance"));
}

#[test]
fn empty_and_failing_report_lists() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "[]").unwrap();
    let out = affcohom(&["report", "--input", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[]");

    let full = dir.path().join("one.json");
    affcohom(&["run", "h0-vanish", "--out", full.to_str().unwrap()]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&full).unwrap()).unwrap();
    v[0]["pass"] = Value::Bool(false);
    std::fs::write(&full, v.to_string()).unwrap();
    let out = affcohom(&["report", "--format", "md", "--input", full.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected"));
}

#[test]
fn check_suite_passes() {
    let out = affcohom(&["check"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn full_default_suite_has_one_object_per_entry() {
    let out = affcohom(&["run-all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), affcohom::experiments::CATALOG.len());
    assert_eq!(names, affcohom::experiments::CATALOG.to_vec());
}
