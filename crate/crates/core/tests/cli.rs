use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::NamedTempFile;

const HOLLOW: &str = "# hollow triangle\na b\nb c\nc a\n";
const FULL: &str = "a b c\n";
const K5: &str = "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const C6: &str = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn scatkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scatkit"))
        .args(args)
        .env_remove("SCATKIT_BUDGET")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn subdivision_of_hollow_triangle() {
    let k = file(HOLLOW);
    let out = scatkit(&["sd", path(&k)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let facets = v["facets"].as_array().unwrap();
    assert_eq!(facets.len(), 6);
    let mut labels: Vec<&str> = facets.iter().flat_map(|f| f.as_array().unwrap()).map(|l| l.as_str().unwrap()).collect();
    labels.sort();
    labels.dedup();
    assert_eq!(labels.len(), 6);
}

#[test]
fn core_of_a_simplex_is_a_point_with_a_log() {
    let k = file(FULL);
    let out = scatkit(&["core", path(&k)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["core"]["facets"].as_array().unwrap().len(), 1);
    assert_eq!(v["core"]["facets"][0].as_array().unwrap().len(), 1);
    assert_eq!(v["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn hollow_triangle_is_not_a_hexagon() {
    let (a, b) = (file(HOLLOW), file(C6));
    let out = scatkit(&["--format", "text", "iso", path(&a), path(&b)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "not isomorphic");
}

#[test]
fn scat_of_k5_with_witness() {
    let k = file(K5);
    let out = scatkit(&["scat", path(&k)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["lower"], 2);
    assert_eq!(v["upper"], 2);
    assert_eq!(v["exact"], true);
    assert_eq!(v["witness"]["blocks"].as_array().unwrap().len(), 3);
    assert_eq!(v["chains"].as_array().unwrap().len(), 3);
}

#[test]
fn interval_results_exit_ten() {
    let k = file(K5);
    let out = scatkit(&["scat", path(&k), "--no-graph-fast-path", "--partition-budget", "1"]);
    assert_eq!(out.status.code(), Some(10));
    let v = json(&out);
    assert_eq!(v["exact"], false);
}

#[test]
fn arboricity_of_k5() {
    let k = file(K5);
    let v = json(&scatkit(&["arboricity", path(&k)]));
    assert_eq!(v["arboricity"], 3);
    assert_eq!(v["forests"].as_array().unwrap().len(), 3);
}

#[test]
fn gscat_and_wscat() {
    let k = file(K5);
    let v = json(&scatkit(&["gscat", path(&k)]));
    assert_eq!(v["upper"], 2);
    let t = file(HOLLOW);
    let out = scatkit(&["wscat", path(&t), "--basepoint", "a", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["decision"], "no");
}

#[test]
fn categorical_blocks_carry_chains() {
    let t = file(HOLLOW);
    let v = json(&scatkit(&["categorical", path(&t), "--facets", "0,1"]));
    assert_eq!(v["decision"], "yes");
    assert!(v["witness"]["maps"].as_array().unwrap().len() >= 2);
    let v = json(&scatkit(&["categorical", path(&t), "--facets", "0,1,2"]));
    assert_eq!(v["decision"], "no");
}

#[test]
fn maps_contiguity_and_classes() {
    let id = file(r#"{"source": "a b c\n", "target": "a b c\n", "assignment": {"a":"a","b":"b","c":"c"}}"#);
    let ca = file(r#"{"source": "a b c\n", "target": "a b c\n", "assignment": {"a":"a","b":"a","c":"a"}}"#);
    let v = json(&scatkit(&["contiguous", path(&id), path(&ca)]));
    assert_eq!(v["contiguous"], true);
    let v = json(&scatkit(&["class", path(&id), path(&ca)]));
    assert_eq!(v["decision"], "yes");
}

#[test]
fn budget_exhaustion_is_unknown() {
    let hollow_id = r#"{"source": "a b\nb c\nc d\nd e\n", "target": "a b\nb c\nc d\nd e\n", "assignment": {"a":"a","b":"b","c":"c","d":"d","e":"e"}}"#;
    let far = r#"{"source": "a b\nb c\nc d\nd e\n", "target": "a b\nb c\nc d\nd e\n", "assignment": {"a":"e","b":"e","c":"e","d":"e","e":"e"}}"#;
    let (f, g) = (file(hollow_id), file(far));
    let out = scatkit(&["--budget", "2", "class", path(&f), path(&g)]);
    assert_eq!(out.status.code(), Some(10));
    assert_eq!(json(&out)["decision"], "unknown");
    let out = Command::new(env!("CARGO_BIN_EXE_scatkit"))
        .args(["class", path(&f), path(&g)])
        .env("SCATKIT_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(10));
}

#[test]
fn exit_codes_for_bad_input() {
    let bad = file("{\"facets\": 7}");
    assert_eq!(scatkit(&["info", path(&bad)]).status.code(), Some(2));
    assert_eq!(scatkit(&["info", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(scatkit(&["frobnicate"]).status.code(), Some(2));
    let t = file(HOLLOW);
    assert_eq!(scatkit(&["fatwedge", path(&t), "--basepoint", "z", "--n", "2"]).status.code(), Some(3));
    let two = file("a b\nc d\n");
    assert_eq!(scatkit(&["wscat", path(&two), "--basepoint", "a", "--n", "0"]).status.code(), Some(3));
    assert_eq!(scatkit(&["--budget", "0", "scat", path(&t)]).status.code(), Some(3));
}

#[test]
fn stdin_input_and_text_round_trip() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_scatkit"))
        .args(["--format", "text", "cone", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(HOLLOW.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    let again = file(&text);
    let out = scatkit(&["--format", "text", "info", path(&again)]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("vertices 4"));
}

#[test]
fn constructions_run() {
    let (t, e) = (file(HOLLOW), file("0 1\n"));
    for args in [
        vec!["product", path(&t), path(&e)],
        vec!["join", path(&t), path(&e)],
        vec!["suspension", path(&t)],
        vec!["fatwedge", path(&t), "--basepoint", "a", "--n", "2"],
        vec!["sd", path(&e), "--iterations", "2"],
        vec!["bisect", path(&t)],
        vec!["inequalities", path(&t), path(&e)],
    ] {
        let out = scatkit(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let v = json(&scatkit(&["sd", path(&e), "--iterations", "2"]));
    assert_eq!(v["facets"].as_array().unwrap().len(), 4);
}

#[test]
fn reproduction_suite_detects_a_corrupted_fixture() {
    let out = scatkit(&["--format", "text", "verify-paper", "--only", "1,7,13"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).matches("PASS").count(), 3);
    let corrupt = file(FULL);
    let arg = format!("hollow-triangle={}", path(&corrupt));
    let out = scatkit(&["verify-paper", "--only", "1", "--fixture", &arg]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
}

#[test]
fn full_reproduction_suite_passes() {
    let out = scatkit(&["--threads", "2", "verify-paper"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["checks"].as_array().unwrap().len(), 16);
}
