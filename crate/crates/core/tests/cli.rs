//! The command-line binary, mostly in real mode to stay fast.

use std::path::PathBuf;
use std::process::{Command, Output};

fn cache() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("clifford4-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clifford4"))
        .args(args)
        .arg("--cache-dir")
        .arg(cache())
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--mode", "real"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "8640");
    let o = run(&["enumerate", "--mode", "real", "--seed", "0000", "--no-cache"]);
    assert_eq!(stdout(&o).trim(), "8640");
    let o = run(&["enumerate", "--mode", "complex"]);
    assert_eq!(stdout(&o).trim(), "293760");
}

#[test]
fn enumerate_writes_a_readable_state_file() {
    let path = cache().join("real.states");
    let o = run(&["enumerate", "--mode", "real", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let set = clifford4::closure::StateSet::read_from(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(set.len(), 8640);
}

#[test]
fn orbits_table_and_verify() {
    let o = run(&["orbits", "--mode", "real", "--verify"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 1 + 29);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("[warning]") && err.contains("Vhat4^r"));
}

#[test]
fn transitions_report_diameter() {
    let o = run(&["transitions", "--mode", "real"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("diameter: 5"));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("What^r under CZ12"));
}

#[test]
fn export_dot_has_all_nodes() {
    let o = run(&["export", "--mode", "real", "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph orbits {"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("--")).count(), 29);
    let o = run(&["export", "--mode", "real", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["diameter"], 5);
}

#[test]
fn connect_prints_verified_circuit() {
    let o = run(&["connect", "--mode", "real", "|0000>", "(1/sqrt2)(|1110> - |1101>)"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("cnots: 1"));
    assert!(out.contains("replay: verified"));
    let o = run(&["connect", "--mode", "real", "|0000>", "|0000>"]);
    assert!(stdout(&o).contains("circuit: \n"));
}

#[test]
fn census_table() {
    let o = run(&["census", "--verify"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("total\t307"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--workers", "0", "census"]).status.code(), Some(2));
    assert_eq!(run(&["connect", "--mode", "real", "|0000>", "|00x0>"]).status.code(), Some(2));
    assert_eq!(run(&["connect", "--mode", "real", "|0000>", "i|0000>"]).status.code(), Some(2));
}
