use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn quiver(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siltwork")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn dims(v: &Value) -> Vec<usize> {
    v["dim"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect()
}

#[test]
fn enumerate_a2() {
    let d = TempDir::new().unwrap();
    let q = quiver(&d, "a2.json", r#"{"vertices":2,"arrows":[[2,1]]}"#);
    let v = json(&run(&["excseq", "--quiver", &q, "--enumerate"]));
    assert_eq!(v["count"], 3);
    let v = json(&run(&["indec", "--quiver", &q]));
    assert_eq!(v["count"], 3);
}

#[test]
fn place_p2_trace() {
    let d = TempDir::new().unwrap();
    let q = quiver(&d, "a2.json", r#"{"vertices":2,"arrows":[[2,1]]}"#);
    let v = json(&run(&["place", "--quiver", &q, "--sequence", "P2"]));
    assert_eq!(v["rules"], serde_json::json!(["P1"]));
    assert_eq!(v["verified"], true);
    let c = v["complements"].as_array().unwrap();
    assert_eq!(dims(&c[0]["module"]), vec![1, 0]);
    assert_eq!(dims(&c[1]["module"]), vec![0, 1]);
    assert_eq!(c[1]["degree"], 0);
    assert_eq!(v["sequence"][0]["degree"], 0);
}

#[test]
fn output_is_byte_stable() {
    let d = TempDir::new().unwrap();
    let q = quiver(&d, "a3.json", r#"{"vertices":3,"arrows":[[2,1],[3,2]]}"#);
    let args = ["cluster", "--quiver", q.as_str(), "--m", "2", "--sequence", "P1@0,P3@1"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let out = d.path().join("out.json");
    let out_s = out.to_string_lossy().into_owned();
    let mut with_out = args.to_vec();
    with_out.extend(["--out", out_s.as_str()]);
    assert!(run(&with_out).status.success());
    assert_eq!(fs::read(Path::new(&out)).unwrap(), a.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["exchange"]["complements"].as_array().unwrap().len(), 3);
    assert_eq!(v["exchange"]["wrap"]["d_triangle"], false);
}

#[test]
fn homext_dot_and_mutation() {
    let d = TempDir::new().unwrap();
    let q = quiver(&d, "tri.json", r#"{"vertices":3,"arrows":[[2,1],[3,1],[3,2]]}"#);
    let out = run(&["homext", "--quiver", &q, "--sequence", "P1,P2,P3", "--format", "dot"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("digraph"));
    let v = json(&run(&["mutate", "--quiver", &q, "--sequence", "P1,P2,P3", "--index", "1"]));
    let got: Vec<Vec<usize>> = v.as_array().unwrap().iter().map(dims).collect();
    assert_eq!(got, vec![vec![1, 1, 0], vec![0, 1, 0], vec![2, 1, 1]]);
    let v = json(&run(&["mutate", "--quiver", &q, "--sequence", "P1,P2,P3", "--index", "2"]));
    assert_eq!(dims(&v[2]), vec![1, 0, 1]);
}

#[test]
fn silting_window() {
    let d = TempDir::new().unwrap();
    let q = quiver(&d, "a2.json", r#"{"vertices":2,"arrows":[[2,1]]}"#);
    let v = json(&run(&["silting", "--quiver", &q, "--sequence", "S2@0,S1@1"]));
    assert_eq!(v["silting"], true);
    let v = json(&run(&["silting", "--quiver", &q, "--sequence", "S2@1,S1@1"]));
    assert_eq!(v["silting"], false);
    let v = json(&run(&["silting", "--quiver", &q, "--sequence", "P2@0", "--window", "-2..3"]));
    assert_eq!(v["complements"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_all_a3() {
    let d = TempDir::new().unwrap();
    let q = quiver(&d, "a3.json", r#"{"vertices":3,"arrows":[[1,2],[2,3]]}"#);
    let out = run(&["verify-all", "--quiver", &q, "--max-m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn errors_and_exit_codes() {
    let d = TempDir::new().unwrap();
    let bad = quiver(&d, "bad.json", r#"{"vertices":2}"#);
    let out = run(&["indec", "--quiver", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    let cyc = quiver(&d, "cyc.json", r#"{"vertices":2,"arrows":[[1,2],[2,1]]}"#);
    assert_eq!(run(&["indec", "--quiver", &cyc]).status.code(), Some(1));

    let q = quiver(&d, "a2.json", r#"{"vertices":2,"arrows":[[2,1]]}"#);
    assert_eq!(run(&["excseq", "--quiver", &q, "--sequence", "S2,S1,P2"]).status.code(), Some(0));
    assert_eq!(run(&["place", "--quiver", &q, "--sequence", "S2,S1"]).status.code(), Some(1));
    assert_eq!(run(&["indec", "--quiver", &q, "--format", "dot"]).status.code(), Some(1));
    assert_eq!(run(&["mutate", "--quiver", &q, "--sequence", "S1,P2", "--index", "0"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
