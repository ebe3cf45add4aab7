use std::process::{Command, Output};

use serde_json::Value;

fn revsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revsym")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = revsym(&full);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (v, out.status.code().unwrap())
}

fn orders(v: &Value) -> Vec<String> {
    let mut o: Vec<String> = v["result"]["reversors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["order"].as_str().unwrap().to_string())
        .collect();
    o.sort();
    o.dedup();
    o
}

#[test]
fn analyze_fibonacci_in_pgl() {
    let (v, code) = json(&["analyze", "0 1; 1 1", "--group", "pgl"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["result"]["status"], "Classified");
    assert_eq!(v["result"]["classification"]["InfiniteDihedral"]["all_involutions"], true);
    assert_eq!(orders(&v), ["2"]);
    assert_eq!(v["bounds"]["reversor"], 10);
    assert_eq!(v["bounds"]["generator"], 50);
}

#[test]
fn analyze_case_two() {
    let (v, code) = json(&["analyze", "5 7; 7 10", "--group", "gl"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["classification"]["TwoInfty"], "Case2");
    assert_eq!(orders(&v), ["4"]);
}

#[test]
fn analyze_identity_and_irreversible() {
    let (v, _) = json(&["analyze", "1 0; 0 1"]);
    assert_eq!(v["result"]["status"], "TriviallyReversible");
    let (v, code) = json(&["analyze", "0 1; 1 1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["status"], "IrreversibleProven");
}

#[test]
fn analyze_reads_files_and_checks_dimension() {
    let path = std::env::temp_dir().join(format!("revsym-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "0 1 0 0\n0 0 1 0\n0 0 0 1\n-1 2 2 2\n").unwrap();
    let p = path.to_str().unwrap();
    let (v, code) = json(&["analyze", "--file", p, "--group", "pgl", "--dim", "4", "--reversor-bound", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["char_poly"], "x^4 - 2x^3 - 2x^2 - 2x + 1");
    assert_eq!(revsym(&["analyze", "--file", p, "--dim", "3"]).status.code(), Some(2));
    std::fs::remove_file(path).ok();
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(revsym(&["analyze", "1 x; 0 1"]).status.code(), Some(2));
    assert_eq!(revsym(&["analyze", "1 2 3; 0 1"]).status.code(), Some(2));
    assert_eq!(revsym(&["analyze", "2 0; 0 1"]).status.code(), Some(3));
    assert_eq!(revsym(&["analyze", "0 1; 1 1", "--group", "sl"]).status.code(), Some(2));
}

#[test]
fn absgroup_examples() {
    let (v, code) = json(&["absgroup", "c4", "--window", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order_spectrum"], serde_json::json!(["4"]));
    let (v, code) = json(&["absgroup", "c2p", "--p", "3", "--window", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order_spectrum"], serde_json::json!(["2", "6"]));
    let (v, code) = json(&["absgroup", "dinf", "--window", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order_spectrum"], serde_json::json!(["2"]));
    assert_eq!(v["bounds"]["window"], 3);
}

#[test]
fn absgroup_rejects_bad_models() {
    assert_eq!(revsym(&["absgroup", "quaternion"]).status.code(), Some(2));
    assert_eq!(revsym(&["absgroup", "c2p", "--p", "9"]).status.code(), Some(2));
    assert_eq!(revsym(&["absgroup", "c2p", "--p", "5", "--window", "6"]).status.code(), Some(3));
}

#[test]
fn polyauto_cases_and_trace() {
    for case in ["case1", "case2", "case3", "trace"] {
        let out = revsym(&["polyauto", case]);
        assert_eq!(out.status.code(), Some(0), "{case}: {}", String::from_utf8_lossy(&out.stdout));
    }
    let (v, _) = json(&["polyauto", "trace"]);
    assert_eq!(v["result"]["checks"]["invariant_preserved"], true);
    let (v, code) = json(&["polyauto", "case1", "--p", "0 2 0 1", "--q", "0 1 0 0 0 1"]);
    assert_eq!(code, 0);
    assert_eq!(v["input"]["p"], "x^3 + 2x");
    assert_eq!(revsym(&["polyauto", "case1", "--p", "0 0 1"]).status.code(), Some(3));
}

#[test]
fn elliptic_examples() {
    let (v, code) = json(&["elliptic", "--curve", "0", "1", "--omega", "2", "3", "--s", "0", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["conjugation_inverts"], true);
    assert_eq!(v["result"]["inverse_translation"], "(2, -3)");
    let out = revsym(&["elliptic", "--curve", "-2", "1", "--omega", "0", "1", "--s", "1", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(revsym(&["elliptic", "--curve", "0", "0", "--omega", "1", "1", "--s", "1", "1"]).status.code(), Some(3));
    assert_eq!(revsym(&["elliptic", "--curve", "0", "1", "--omega", "1", "1", "--s", "0", "1"]).status.code(), Some(3));
}

#[test]
fn modroots_fifteen() {
    let (v, code) = json(&["modroots", "15"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["roots"], serde_json::json!(["1", "4", "11", "14"]));
    assert_eq!(v["result"]["predicted"], 4);
    assert_eq!(v["result"]["matches"], true);
    assert_eq!(revsym(&["modroots", "0"]).status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "analyze", "1 1; 1 2"][..],
        &["--format", "json", "absgroup", "twisted", "--twist", "3"][..],
        &["polyauto", "case3"][..],
    ] {
        let a = revsym(args);
        let b = revsym(args);
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.is_empty());
    }
    let (v, _) = json(&["modroots", "8"]);
    assert!(v["wall_time_ms"].is_null());
    let (v, _) = json(&["--timing", "modroots", "8"]);
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn scoreboard_passes() {
    let out = revsym(&["verify-paper"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("9/9 criteria passed"));
}
