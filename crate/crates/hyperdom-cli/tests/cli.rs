//! End-to-end tests against the built binary: exit codes, the file
//! format over stdin-less invocations, and report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperdom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmpfile(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hyperdom-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn gen_writes_the_plane() {
    let out = run(&["gen", "F"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "7 7\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n"
    );
}

#[test]
fn gen_to_file_then_inv() {
    let path = tmpfile("f1.hg");
    let out = run(&["gen", "F1", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let out = run(&["inv", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n: 14"));
    assert!(text.contains("rank: 4"));
    assert!(text.contains("domination: 3"));
    assert!(text.contains("matching: 1"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn inv_reports_quasidegrees() {
    let out = run(&["inv", "F"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("quasidegree: 1=3 2=3 3=3 4=3 5=3 6=3 7=3"));
}

#[test]
fn reduce_prints_the_pipeline() {
    let out = run(&["reduce", "F2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("peel: deleted {1,2,3}"));
    assert!(text.contains("shrunk hypergraph"));
}

#[test]
fn iso_exit_codes() {
    let out = run(&["iso", "F1", "F1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("isomorphic: yes"));

    let out = run(&["iso", "F2", "F3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("isomorphic: no"));
}

#[test]
fn check_lemmas_exit_codes() {
    let out = run(&["check-lemmas", "F1"]);
    assert!(out.status.success());

    let path = tmpfile("single.hg");
    std::fs::write(&path, "4 1\n1 2 3 4\n").unwrap();
    let out = run(&["check-lemmas", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["gen", "F9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["inv", "/no/such/file.hg"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify-bound", "--rank", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_bound_small_run() {
    let out = run(&["verify-bound", "-r", "4", "-t", "20", "--seed", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: PASS"));
}

#[test]
fn verify_all_json_is_deterministic() {
    let args = [
        "verify-all",
        "--trials",
        "10",
        "--seed",
        "3",
        "--format",
        "json",
    ];
    let strip = |text: &str| -> String {
        text.lines()
            .filter(|l| !l.trim_start().starts_with("\"timing_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(strip(&stdout(&a)), strip(&stdout(&b)));
    assert!(stdout(&a).contains("\"verdict\": \"PASS\""));
}

#[test]
fn worker_count_env_is_honored() {
    let out = bin()
        .args(["verify-theorem"])
        .env("HYPERDOM_THREADS", "2")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: PASS"));
}

#[test]
fn parse_errors_carry_positions() {
    let path = tmpfile("bad.hg");
    std::fs::write(&path, "3 1\n1 1 2\n").unwrap();
    let out = run(&["inv", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 2"), "stderr: {err}");
    std::fs::remove_file(&path).ok();
}
