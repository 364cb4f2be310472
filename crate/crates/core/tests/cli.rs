use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn cliquedeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliquedeg")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn turan_report() {
    let out = cliquedeg(&["turan", "--r", "3", "--n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["t"], 16);
    assert_eq!(v["result"]["parts"], serde_json::json!([3, 2, 2]));
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config"]["command"], "turan");

    let text = cliquedeg(&["turan", "--r", "3", "--n", "7", "--format", "text"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("t=16\nparts=[3, 2, 2]"));
}

#[test]
fn greedy_and_delta_on_four_cycle() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "Cr").unwrap();
    let path = file.path().to_str().unwrap();

    let out = cliquedeg(&["greedy", "--input", path, "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let g = &json(&out)["result"]["graphs"][0];
    assert_eq!(g["p_sequence"]["degree_sums"], serde_json::json!([2, 4]));
    assert_eq!(g["turext"]["equality_attained"], true);

    let out = cliquedeg(&["delta", "--input", path, "--r", "2"]);
    assert_eq!(json(&out)["result"]["graphs"][0]["delta"]["value"], 4);
}

#[test]
fn extremal_csv() {
    let out = cliquedeg(&["extremal", "--n", "5", "--m", "6", "--r", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,r,mode,delta_min,ratio_num,ratio_den,witness_g6,graphs_examined"));
    assert!(lines.next().unwrap().starts_with("5,6,2,exhaustive,5,24,5,"));
}

#[test]
fn output_is_deterministic_across_workers() {
    let a = cliquedeg(&["scan", "--n", "6", "--r", "3", "--m-from", "8", "--m-to", "15", "--format", "csv"]);
    let b = cliquedeg(&["scan", "--n", "6", "--r", "3", "--m-from", "8", "--m-to", "15", "--format", "csv", "--workers", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stab.json");
    let out = cliquedeg(&["stability", "--n", "7", "--r", "2", "--epsilon", "1/4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["result"]["rows"][0]["m"], 12);
}

#[test]
fn verify_reports_counts() {
    let out = cliquedeg(&["verify", "--n-max", "4", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let pair = v["result"]["pairs"].as_array().unwrap().iter().find(|p| p["n"] == 4).unwrap().clone();
    assert_eq!(pair["graphs"], 22);
    assert_eq!(v["result"]["violations"], 0);
}

#[test]
fn errors_exit_with_one() {
    for args in [
        vec!["turan", "--r", "0", "--n", "3"],
        vec!["extremal", "--n", "9", "--m", "3", "--r", "2"],
        vec!["stability", "--n", "7", "--r", "2", "--epsilon", "3/2"],
        vec!["verify", "--n-max", "4", "--r", "2", "--max-graphs", "3"],
        vec!["delta", "--input", "/nonexistent/graphs.g6", "--r", "2"],
        vec!["turan", "--r", "2", "--n", "3", "--format", "csv"],
        vec!["nonsense"],
    ] {
        let out = cliquedeg(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
