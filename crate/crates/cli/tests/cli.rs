use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motivic-cc")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect()
}

fn all_ok(report: &Value) -> bool {
    report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "ok")
}

#[test]
fn zeta_of_p1() {
    let r = json(&["zeta", "--builtin", "P1", "--order", "2", "--spec", "uv"]);
    assert_eq!(strings(&r["coefficients"])[2], "1+uv+u^2v^2");
    assert!(all_ok(&r));
}

#[test]
fn zeta_of_point_is_all_ones() {
    for spec in ["uv", "chi-y", "chi"] {
        let r = json(&["zeta", "--builtin", "point", "--order", "5", "--spec", spec]);
        assert_eq!(strings(&r["coefficients"]), vec!["1"; 6], "{spec}");
    }
}

#[test]
fn euler_characteristics_of_symmetric_products_of_p1() {
    let r = json(&["zeta", "--builtin", "P1", "--order", "6", "--spec", "chi"]);
    let expected: Vec<String> = (1..=7).map(|n| n.to_string()).collect();
    assert_eq!(strings(&r["coefficients"]), expected);
}

#[test]
fn exponents_examples() {
    let r = json(&["exponents", "--dim", "2", "--order", "3"]);
    assert_eq!(strings(&r["coefficients"]), ["1", "L", "L^2"]);
    let r = json(&["exponents", "--dim", "1", "--order", "3"]);
    assert_eq!(strings(&r["coefficients"]), ["1", "0", "0"]);
    let r = json(&["exponents", "--dim", "3", "--order", "3"]);
    assert_eq!(strings(&r["coefficients"]), ["1", "L+L^2", "L^2+L^3+L^4"]);
    assert!(all_ok(&r));
}

#[test]
fn exponents_of_a_series_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("series.json");
    // 1 + t + (1+L) t² + (1+L+L²) t³
    let terms = |k: usize| (0..k).map(|i| format!(r#"{{"lNum": {}, "c": "1"}}"#, 2 * i)).collect::<Vec<_>>().join(",");
    let body = format!(r#"{{"coefficients": [[{}], [{}], [{}], [{}]]}}"#, terms(1), terms(1), terms(2), terms(3));
    std::fs::write(&path, body).unwrap();
    let r = json(&["exponents", "--series", path.to_str().unwrap(), "--order", "3"]);
    assert_eq!(strings(&r["coefficients"]), ["1", "L", "L^2"]);
}

#[test]
fn curve_hilbert_classes_are_symmetric_product_classes() {
    let hilb = json(&["classes", "--builtin", "P1", "--dim", "1", "--order", "4", "--kind", "hilb"]);
    let sym = json(&["classes", "--builtin", "P1", "--order", "4", "--kind", "sym"]);
    assert_eq!(hilb["coefficients"], sym["coefficients"]);
    assert!(all_ok(&hilb) && all_ok(&sym));
}

#[test]
fn surface_degree_check() {
    let r = json(&["classes", "--builtin", "P2", "--dim", "2", "--order", "3", "--kind", "hilb"]);
    let check = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "degree-check").unwrap();
    assert_eq!(check["status"], "ok");
}

#[test]
fn aluffi_point_reports_convention_and_macmahon() {
    let r = json(&["classes", "--builtin", "point", "--dim", "3", "--order", "4", "--kind", "aluffi"]);
    assert!(r["params"]["convention"].as_str().unwrap().contains("(-t)^n"));
    assert!(all_ok(&r));
    let atoms = &r["coefficients"][1]["terms"][0]["atoms"];
    assert_eq!(atoms[0], "d1*[P0]");
}

#[test]
fn chern_and_config_checks_pass() {
    for args in [
        ["classes", "--builtin", "P1xP1", "--dim", "2", "--order", "3", "--kind", "chern"],
        ["classes", "--builtin", "P2", "--dim", "3", "--order", "3", "--kind", "chern"],
        ["classes", "--builtin", "P1", "--dim", "1", "--order", "4", "--kind", "config"],
    ] {
        assert!(all_ok(&json(&args)), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["zeta", "--builtin", "P9"]).status.code(), Some(2));
    assert_eq!(run(&["zeta", "--model", "/nonexistent/model.json"]).status.code(), Some(2));
    assert_eq!(run(&["exponents", "--dim", "3", "--order", "4"]).status.code(), Some(3));
    assert_eq!(run(&["classes", "--builtin", "P1", "--dim", "2", "--kind", "virtual"]).status.code(), Some(3));
    assert_eq!(run(&["zeta", "--builtin", "P1", "--order", "13"]).status.code(), Some(3));
    let capped = Command::new(env!("CARGO_BIN_EXE_motivic-cc"))
        .args(["zeta", "--builtin", "P1", "--order", "5"])
        .env("MOTIVIC_CC_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn schema_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"name": "x", "dim": 0}"#).unwrap();
    assert_eq!(run(&["zeta", "--model", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_and_exact() {
    let args = ["verify", "--suite", "pontrjagin", "--order", "4", "--seed", "7", "--cases", "20"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    for args in [
        vec!["classes", "--builtin", "P2", "--dim", "2", "--order", "3", "--kind", "hilb"],
        vec!["classes", "--builtin", "P3", "--order", "3", "--kind", "aluffi"],
        vec!["zeta", "--builtin", "P1xP2", "--order", "4", "--spec", "chi-y"],
    ] {
        let out = String::from_utf8(run(&args).stdout).unwrap();
        assert!(!out.contains('.'), "decimal point in {args:?}");
    }
}

#[test]
fn verify_lambda_suite_passes() {
    let out = run(&["verify", "--suite", "lambda", "--order", "6", "--cases", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(all_ok(&r));
}

#[test]
fn model_files_round_trip_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p1xp1.json");
    let emitted = run(&["model", "--builtin", "P1xP1"]);
    assert!(emitted.status.success());
    std::fs::write(&path, &emitted.stdout).unwrap();
    let from_file = json(&["zeta", "--model", path.to_str().unwrap(), "--order", "4"]);
    let builtin = json(&["zeta", "--builtin", "P1xP1", "--order", "4"]);
    assert_eq!(from_file["coefficients"], builtin["coefficients"]);
    assert!(all_ok(&from_file));
}

#[test]
fn pretty_output_is_a_table() {
    let out = run(&["--pretty", "zeta", "--builtin", "P1", "--order", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("t^2: 1+uv+u^2v^2"), "{text}");
}
