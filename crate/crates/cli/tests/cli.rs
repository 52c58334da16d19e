use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2skein")).args(args).env_remove("G2SKEIN_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn jones_unknot() {
    for expr in ["A1", "B13"] {
        let o = run(&["jones", "--expr", expr]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), "-1*s^2 - 1*s^-2");
    }
    let o = run(&["jones", "--expr", "A1", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["expr"], "A1");
    assert_eq!(v["text"], "-1*s^2 - 1*s^-2");
}

#[test]
fn parse_errors_exit_2() {
    let o = run(&["jones", "--expr", "B12 B12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn convert() {
    let o = run(&["convert", "--from", "monomial", "--to", "theta", "--key", "1,0,0"]);
    assert_eq!(stdout(&o).trim(), "(1) n(1,1,0)");
    let o = run(&["convert", "--from", "monomial", "--key", "0,0,0"]);
    assert_eq!(stdout(&o).trim(), "(1) n(0,0,0)");
    let o = run(&["convert", "--from", "chebyshev", "--gen", "B13", "--n", "3"]);
    assert_eq!(stdout(&o).trim(), "(1) n(3,0,3)");
}

#[test]
fn act_json_schema() {
    let o = run(&["act", "--basis", "psi", "--op", "B12", "--state", "0,0,0", "--uv", "s2", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["basis"], "psi");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["key"], serde_json::json!([1, 1, 0]));
    let o = run(&["act", "--basis", "n", "--op", "B12", "--state", "0,1,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_dehn_passes() {
    let o = run(&["verify", "dehn", "--trunc", "10"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS dehn"));
}

#[test]
fn dropping_k_is_detected() {
    assert!(run(&["verify", "relations", "--surface", "sigma04", "--trunc", "6"]).status.success());
    let o = run(&["verify", "relations", "--surface", "sigma04", "--trunc", "6", "--drop-k"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn controls_are_exact_only() {
    assert_eq!(run(&["verify", "negative-controls", "--mode", "prob"]).status.code(), Some(2));
    assert!(run(&["verify", "negative-controls"]).status.success());
}

#[test]
fn json_reports_are_deterministic() {
    for args in [
        &["verify", "triangularity", "--json"][..],
        &["verify", "dehn", "--trunc", "8", "--mode", "prob", "--points", "3", "--seed", "11", "--json"][..],
    ] {
        let a = run(args);
        let b = run(&[args, &["--jobs", "1"]].concat());
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
        let v: Value = serde_json::from_slice(&a.stdout).unwrap();
        assert!(v["suite"].is_string());
        assert!(v["config"].is_object());
        for id in v["identities"].as_array().unwrap() {
            assert!(id["name"].is_string());
            assert!(id["checked"].as_u64().unwrap() > 0);
            assert!(id["failures"].as_array().unwrap().is_empty());
        }
    }
}
