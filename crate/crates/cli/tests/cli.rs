use std::process::{Command, Output};

use serde_json::Value;

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = hecke(&all);
    serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

#[test]
fn validate_reports_the_condition() {
    let o = hecke(&["validate", "--string", "0,1,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fail, condition (3)"));
    let v = json(&["validate", "--string", "0,1,-1,2,0,3,-2,1"]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["tableau"], serde_json::json!([[1, 2, 4, 6], [3, 5, 8], [7]]));
    let v = json(&["validate", "--string", "1,0"]);
    assert_eq!(v["condition"], 1);
}

#[test]
fn qdim_of_one_box() {
    let o = hecke(&["qdim", "--shape", "1", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "qdim(1) at d=2: q^-3 + q^-1\n");
    let v = json(&["qdim", "--shape", "2,1", "--d", "3", "--check-trace"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["equal"], true);
    assert_eq!(v["closed"], v["via_trace"]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn idempotents_of_rank_two() {
    let o = hecke(&["idempotents", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("2 idempotents; sum=1: true, orthogonal: true"), "{s}");
    let v = json(&["idempotents", "--n", "3", "--direct"]);
    assert_eq!(v["idempotents"].as_array().unwrap().len(), 4);
    assert_eq!(v["orthogonal"], true);
}

#[test]
fn symbolic_limit_is_refused_with_guidance() {
    let o = hecke(&["idempotents", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("--mode evaluated"), "{err}");
    let o = hecke(&["idempotents", "--n", "3", "--symbolic-limit", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn evaluated_mode_runs_per_sample() {
    let v = json(&["idempotents", "--n", "4", "--mode", "evaluated", "--q", "2,7/5"]);
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 2);
    assert_eq!(samples[1]["q"], "7/5");
    assert!(samples.iter().all(|s| s["sum_is_one"] == true && s["orthogonal"] == true));
    let v = json(&["rep", "--shape", "3,1", "--mode", "evaluated", "--samples", "3"]);
    assert_eq!(v["samples"].as_array().unwrap().len(), 3);
    let o = hecke(&["rep", "--shape", "2", "--mode", "evaluated", "--q", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn trace_of_expressions() {
    let v = json(&["trace", "--n", "2", "--d", "1", "--expr", "s1"]);
    assert_eq!(v["trace"], json(&["qdim", "--shape", "1", "--d", "1"])["closed"]);
    let o = hecke(&["trace", "--n", "2", "--d", "1", "--expr", "s1^-1", "--expectation"]);
    assert_eq!(stdout(&o), "Tr(s1^-1) = q^-3\nTr_{d(2)}(s1^-1) = q^-2*T[]\n");
    let o = hecke(&["trace", "--n", "3", "--d", "1", "--expr", "s1 + s4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("byte 5"));
}

#[test]
fn rep_and_tableaux() {
    let v = json(&["rep", "--shape", "2,1"]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["relations"], true);
    assert_eq!(v["basis"], serde_json::json!([[[1, 2], [3]], [[1, 3], [2]]]));
    let v = json(&["tableaux", "--shape", "3,2"]);
    assert_eq!(v["count"], 5);
    assert_eq!(v["frobenius_dim"], "5");
}

#[test]
fn graph_outputs() {
    let dot = stdout(&hecke(&["graph", "--n", "4", "--dot"]));
    assert!(dot.starts_with("digraph young {"));
    assert!(dot.contains("\"(2,1)\" -> \"(3,1)\" [label=\"q^4\"];"));
    let v = json(&["graph", "--n", "4"]);
    assert_eq!(v["paths"], 10);
}

#[test]
fn check_suite_passes_and_output_is_deterministic() {
    let o = hecke(&["check", "--n", "3", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("12 checks, 0 failed"));
    let a = stdout(&hecke(&["idempotents", "--n", "3", "--format", "json"]));
    let b = stdout(&hecke(&["idempotents", "--n", "3", "--format", "json"]));
    assert_eq!(a, b);
    let o = hecke(&["check", "--n", "3", "--mode", "evaluated", "--q", "3/2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(hecke(&["qdim", "--shape", "2,3", "--d", "1"]).status.code(), Some(2));
    assert_eq!(hecke(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hecke(&["graph", "--n", "0"]).status.code(), Some(2));
}
