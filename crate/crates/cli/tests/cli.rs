use std::path::PathBuf;
use std::process::{Command, Output};

use forge_core::compose::{okubo, split_cayley};
use forge_core::io::{parse_algebra, write_algebra};
use forge_core::Scalar;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forge")).args(args).output().expect("forge runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("forge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn build_emits_the_interchange_format() {
    let o = forge(&["build", "split-cayley"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("dim 8 over Q(w)\n"));
    assert_eq!(parse_algebra(&text).unwrap(), split_cayley());
    assert_eq!(text, write_algebra(&split_cayley()));
}

#[test]
fn okubo_file_has_one_line_per_nonzero_product() {
    let o = forge(&["build", "okubo", "--alpha", "2", "--beta", "-3"]);
    let text = stdout(&o);
    let products = text.lines().filter(|l| l.contains("->")).count();
    assert_eq!(products, 32);
    assert_eq!(parse_algebra(&text).unwrap(), okubo(&Scalar::int(2), &Scalar::int(-3)).unwrap());
}

#[test]
fn grading_build_check_and_round_trip() {
    let alg = tmp("okubo.alg");
    let grd = tmp("okubo.grd");
    let o = forge(&["build", "okubo-grading", "--kind", "z3^2", "--algebra-out", alg.to_str().unwrap(), "--out", grd.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&grd).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("deg ")).count(), 8);
    let o = forge(&["grade", "--algebra", alg.to_str().unwrap(), "--grading", grd.to_str().unwrap(), "--check", "--universal", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["values"]["universal_group"], "Z3^2");
}

#[test]
fn exit_codes() {
    // a claim that fails: split Cayley is not a symmetric composition algebra
    let sc = tmp("split.alg");
    std::fs::write(&sc, write_algebra(&split_cayley())).unwrap();
    let o = forge(&["verify", "--algebra", sc.to_str().unwrap(), "--identity", "symmetric"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness="));
    let o = forge(&["verify", "--algebra", sc.to_str().unwrap(), "--identity", "composition"]);
    assert_eq!(o.status.code(), Some(0));
    // usage and IO errors
    assert_eq!(forge(&["scenario", "nonexistent"]).status.code(), Some(2));
    assert_eq!(forge(&["verify", "--algebra", "/nonexistent/file", "--identity", "lie"]).status.code(), Some(2));
    assert_eq!(forge(&["bogus"]).status.code(), Some(2));
    assert_eq!(forge(&["build", "no-such-algebra"]).status.code(), Some(2));
    let bad = tmp("bad.alg");
    std::fs::write(&bad, "dim 2 over Q(w)\n0 5 -> 1:1\n").unwrap();
    assert_eq!(forge(&["verify", "--algebra", bad.to_str().unwrap(), "--identity", "lie"]).status.code(), Some(2));
    assert_eq!(forge(&["magic", "--left", "k", "--right", "s2", "--check", "cartan"]).status.code(), Some(2));
}

#[test]
fn scenario_reports() {
    let o = forge(&["scenario", "table-fidelity"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS split-cayley products"));
    let o = forge(&["scenario", "toral-operator", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["scenario"], "toral-operator");
    assert!(doc["claims"].as_array().unwrap().iter().all(|c| c["outcome"] == "pass"));
}

#[test]
fn list_names_every_scenario() {
    let o = forge(&["list", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = doc["scenarios"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 14);
    assert!(names.contains(&"e8-dempwolff"));
}

#[test]
fn magic_small_cases() {
    let o = forge(&["magic", "--left", "k", "--right", "s2:3", "--check", "jacobi", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["values"]["dim"], 8);
    let o = forge(&["magic", "--left", "s2", "--right", "s2", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["values"]["dim"], 16);
    // para-quaternion algebras are outside the supported dimensions
    assert_eq!(forge(&["magic", "--left", "k", "--right", "petersson:st", "--grade", "z3_5"]).status.code(), Some(2));
}

#[test]
fn magic_emit_round_trips() {
    let p = tmp("f4.alg");
    let o = forge(&["magic", "--left", "k", "--right", "okubo", "--emit", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&p).unwrap();
    let a = parse_algebra(&text).unwrap();
    assert_eq!(a.dim(), 52);
    assert_eq!(write_algebra(&a), text);
    let o = forge(&["verify", "--algebra", p.to_str().unwrap(), "--identity", "lie"]);
    assert_eq!(o.status.code(), Some(0));
}
