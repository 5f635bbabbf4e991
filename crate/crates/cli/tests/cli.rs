use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn evokit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evokit")).args(args).output().expect("spawn evokit")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn export(dir: &Path, name: &str, extra: &[&str]) -> PathBuf {
    let mut args = vec!["catalog", name];
    args.extend_from_slice(extra);
    let out = evokit(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    write(dir, &format!("{name}{}.json", extra.join("")), &stdout(&out))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn existence_example_has_solution() {
    let dir = TempDir::new().unwrap();
    let alg = export(dir.path(), "ex2_5", &[]);
    let target = export(dir.path(), "ex2_5", &["--target"]);
    let out = evokit(&["exists", p(&alg), p(&target)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("SOLUTION x = (1, 1)\n"), "{}", stdout(&out));

    let json: serde_json::Value =
        serde_json::from_slice(&evokit(&["exists", p(&alg), p(&target), "--json"]).stdout).unwrap();
    assert_eq!(json["verdict"]["Solution"], serde_json::json!(["1", "1"]));
}

#[test]
fn existence_examples_without_solution() {
    let dir = TempDir::new().unwrap();
    for name in ["ex2_3", "ex2_4"] {
        let alg = export(dir.path(), name, &[]);
        let target = export(dir.path(), name, &["--target"]);
        let out = evokit(&["exists", p(&alg), p(&target)]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with("NO SOLUTION\n"), "{name}: {}", stdout(&out));
    }
}

#[test]
fn symbolic_transposed_nilpotency_of_mu1() {
    let dir = TempDir::new().unwrap();
    let mu1 = export(dir.path(), "mu1", &[]);
    let out = evokit(&["nilpotent", p(&mu1), "--symbolic", "--transposed"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("RIGHT NILPOTENT for all x\n"), "{text}");
    assert!(text.contains("[2x1, 0]"), "{text}");
}

#[test]
fn approximation_at_a_point() {
    let dir = TempDir::new().unwrap();
    let base = export(dir.path(), "ex2_12_base", &[]);
    let out = evokit(&["approx", p(&base), "--point", "1,1", "--transposed"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[2, 6]\n[4, 8]\n"), "{}", stdout(&out));
}

#[test]
fn distance_to_itself_is_zero() {
    let dir = TempDir::new().unwrap();
    let e3 = export(dir.path(), "E3", &[]);
    let out = evokit(&["distance", p(&e3), p(&e3)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn witness_and_monomial_search() {
    let dir = TempDir::new().unwrap();
    let base = export(dir.path(), "ex2_12_base", &[]);
    let out = evokit(&["catalog", "ex2_12", "--param", "a=4", "--param", "d=1"]);
    let target = write(dir.path(), "target.json", &stdout(&out));
    let swap = write(dir.path(), "swap.json", r#"{"rows": [["0", "1"], ["1", "0"]]}"#);
    let out = evokit(&["iso", p(&base), p(&target), "--witness", p(&swap)]);
    assert_eq!(stdout(&out), "WITNESS VERIFIED\n");

    let out = evokit(&["iso", p(&base), p(&target), "--monomial"]);
    assert!(stdout(&out).starts_with("MONOMIAL ISOMORPHISM\n"), "{}", stdout(&out));
}

#[test]
fn catalog_parameters_are_checked() {
    let out = evokit(&["catalog", "E6", "--param", "a2=1", "--param", "a3=1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error: "), "{}", stderr(&out));

    let out = evokit(&["catalog", "lambda4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("alpha"), "{}", stderr(&out));

    let out = evokit(&["catalog", "lambda4", "--param", "alpha=-1/2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn duplicate_entry_is_rejected() {
    let dir = TempDir::new().unwrap();
    let file = write(
        dir.path(),
        "dup.json",
        r#"{"kind": "general", "dim": 2, "gamma": [[1, 1, 2, "1"], [1, 1, 2, "3"]]}"#,
    );
    let out = evokit(&["info", p(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("dup.json"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(evokit(&[]).status.code(), Some(2));
    assert_eq!(evokit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(evokit(&["approx", "missing.json"]).status.code(), Some(2));
    assert_eq!(evokit(&["--help"]).status.code(), Some(0));
}

#[test]
fn missing_file_exits_with_one() {
    let out = evokit(&["info", "/nonexistent/algebra.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error: cannot read"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["section2", "leibniz", "canonical"] {
        let out = evokit(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert!(!stdout(&out).contains("FAIL"), "{suite}");
    }
    let out = evokit(&["verify", "section2", "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json[0]["suite"], "section2");
}

#[test]
fn info_reports_evolution_extras() {
    let dir = TempDir::new().unwrap();
    let e5 = export(dir.path(), "E5", &[]);
    let text = stdout(&evokit(&["info", p(&e5)]));
    assert!(text.contains("kind: evolution"), "{text}");
    assert!(text.contains("NOT RIGHT NILPOTENT"), "{text}");
    assert!(text.contains("support cycle: e2 -> e2"), "{text}");
}
