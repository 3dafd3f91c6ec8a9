use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hitt::io::parse_dot_edges;
use serde_json::Value;

fn hitt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hitt")).args(args).output().expect("run hitt")
}

fn with_out(args: &[&str], out: &Path) -> Output {
    let mut all: Vec<&str> = args.to_vec();
    all.extend(["--out", out.to_str().unwrap()]);
    hitt(&all)
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn build_writes_the_ten_object_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let out = with_out(&["build", "--linear-an", "3", "--d", "2"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let cat = json(&dir.path().join("catalog.json"));
    assert_eq!(cat["objects"].as_array().unwrap().len(), 10);
    assert_eq!(cat["sequences"].as_array().unwrap().len(), 7);
    assert!(String::from_utf8(out.stdout).unwrap().contains("objects 10"));
}

#[test]
fn single_vertex_catalog_and_lattice() {
    let out = hitt(&["build", "--linear-an", "1", "--d", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let cat: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cat["objects"].as_array().unwrap().len(), 1);
    let out = hitt(&["tilting", "--linear-an", "1", "--d", "1", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(parse_dot_edges(&dot).unwrap(), vec![(0, 1)]);
    assert_eq!(dot.matches("label=").count(), 2);
}

#[test]
fn nakayama_example_needs_d_four() {
    let out = hitt(&["build", "--linear-an", "7", "--rad", "3", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "precondition");
    let out = hitt(&["tilting", "--linear-an", "7", "--rad", "3", "--d", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let file: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(file["verdicts"].as_array().unwrap().len(), 6);
}

#[test]
fn audit_of_the_auslander_example_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = with_out(&["audit", "--linear-an", "3", "--d", "2"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&dir.path().join("report.json"));
    let tilting = report["masod"]["tilting"].as_array().unwrap();
    assert_eq!(tilting.len(), 16);
    assert_eq!(report["masod"]["lattice"]["edges"].as_array().unwrap().len(), 23);
    assert!(!dir.path().join("witness.json").exists());
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = ["tilting", "--linear-an", "3", "--d", "2"];
    let first = with_out(&args, a.path());
    let second = with_out(&args, b.path());
    assert_eq!(first.stdout, second.stdout);
    for name in ["tilting.json", "lattice.dot"] {
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap());
    }
    // the second run in the same directory is served from the cache
    let cached = with_out(&args, a.path());
    assert_eq!(cached.stdout, first.stdout);
    assert_eq!(fs::read_dir(a.path().join("cache")).unwrap().count(), 2);
}

#[test]
fn tampered_cache_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["build", "--linear-an", "2", "--d", "2"];
    assert_eq!(with_out(&args, dir.path()).status.code(), Some(0));
    let entry = fs::read_dir(dir.path().join("cache")).unwrap().next().unwrap().unwrap().path();
    let mut v = json(&entry);
    v["payload"]["tables"]["hom"][0][0] = Value::from(5);
    fs::write(&entry, serde_json::to_string(&v).unwrap()).unwrap();
    let out = with_out(&args, dir.path());
    assert_eq!(out.status.code(), Some(2));
    fs::write(&entry, "{ not json").unwrap();
    assert_eq!(with_out(&args, dir.path()).status.code(), Some(2));
}

#[test]
fn caps_and_bad_input_set_exit_codes() {
    assert_eq!(hitt(&["build", "--linear-an", "3", "--d", "2", "--cap-orbit", "1"]).status.code(), Some(4));
    assert_eq!(hitt(&["tilting", "--linear-an", "3", "--d", "2", "--cap-subsets", "1"]).status.code(), Some(4));
    assert_eq!(hitt(&["build", "--d", "2"]).status.code(), Some(2));
    assert_eq!(hitt(&["build", "--linear-an", "0", "--d", "2"]).status.code(), Some(2));
    assert_eq!(hitt(&["build", "--linear-an", "3", "--d", "2", "--format", "dot"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cycle.json");
    fs::write(
        &file,
        r#"{"vertices":[1,2],"arrows":[{"id":"a","src":1,"tgt":2},{"id":"b","src":2,"tgt":1}],"zero_relations":[],"commutativity_relations":[]}"#,
    )
    .unwrap();
    let out = hitt(&["build", "--algebra", file.to_str().unwrap(), "--d", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(hitt(&["build", "--algebra", missing.to_str().unwrap(), "--d", "1"]).status.code(), Some(2));
}

#[test]
fn algebra_file_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a3.json");
    fs::write(
        &file,
        r#"{"vertices":[1,2,3],"arrows":[{"id":"a1","src":1,"tgt":2},{"id":"a2","src":2,"tgt":3}],"zero_relations":[],"commutativity_relations":[]}"#,
    )
    .unwrap();
    let from_file = hitt(&["tilting", "--algebra", file.to_str().unwrap(), "--d", "1", "--format", "json"]);
    assert_eq!(from_file.status.code(), Some(0), "{}", String::from_utf8_lossy(&from_file.stderr));
    let v: Value = serde_json::from_slice(&from_file.stdout).unwrap();
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 14);
}
