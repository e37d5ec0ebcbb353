use std::path::Path;
use std::process::{Command, Output};

use cptdim::cli::{main_with, EXIT_GUARD, EXIT_INVALID, EXIT_USAGE};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cptdim"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with(std::iter::once("cptdim").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen(dir: &Path, flags: &[&str]) -> Output {
    let mut cmd = bin();
    cmd.arg("gen").args(flags);
    cmd.arg("--tree").arg(dir.join("t.txt")).arg("--paths").arg(dir.join("p.txt"));
    cmd.output().unwrap()
}

#[test]
fn perms_strong_verified() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f.txt");
    let (code, _, err) = run(&["perms", "16", "--strong", "--verify", "--out", s(&out)]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("verification pass"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("16 6\n"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn perms_weak_to_stdout() {
    let (code, out, _) = run(&["perms", "2", "--weak"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2 1\n1 2\n");
}

#[test]
fn perms_usage_errors() {
    assert_eq!(run(&["perms", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["perms", "4", "--weak", "--strong"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn perms_verify_guard_still_writes() {
    let (code, out, err) = run(&["perms", "100", "--verify"]);
    assert_eq!(code, EXIT_GUARD);
    assert!(out.starts_with("100 8\n"));
    assert!(err.contains("refused"));
}

#[test]
fn gen_p12_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = gen(dir.path(), &["--p12", "2", "2"]);
    assert!(o.status.success());
    let tree = std::fs::read_to_string(dir.path().join("t.txt")).unwrap();
    let paths = std::fs::read_to_string(dir.path().join("p.txt")).unwrap();
    assert_eq!(tree.lines().next(), Some("7"));
    assert_eq!(tree.lines().count(), 7);
    assert_eq!(paths.lines().next(), Some("10"));
    assert_eq!(paths.lines().count(), 11);
}

#[test]
fn gen_guard_and_usage() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(gen(dir.path(), &["--p12", "4", "10"]).status.code(), Some(EXIT_GUARD));
    assert_eq!(gen(dir.path(), &["--p12", "1", "2"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(gen(dir.path(), &["--p12", "2"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(gen(dir.path(), &[]).status.code(), Some(EXIT_USAGE));
}

#[test]
fn gen_random_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    assert!(gen(a.path(), &["--random", "60", "120", "7"]).status.success());
    assert!(gen(b.path(), &["--random", "60", "120", "7"]).status.success());
    for f in ["t.txt", "p.txt"] {
        assert_eq!(std::fs::read(a.path().join(f)).unwrap(), std::fs::read(b.path().join(f)).unwrap());
    }
}

#[test]
fn realize_p12() {
    let dir = tempfile::tempdir().unwrap();
    assert!(gen(dir.path(), &["--p12", "2", "2"]).status.success());
    let (t, p) = (dir.path().join("t.txt"), dir.path().join("p.txt"));
    let d = dir.path().join("d.txt");
    let (code, out, err) = run(&["realize", s(&t), s(&p), "--drawings", s(&d)]);
    assert_eq!(code, 0, "{err}");
    let header: Vec<usize> = out.lines().next().unwrap().split(' ').map(|x| x.parse().unwrap()).collect();
    assert!(header[0] <= 5);
    assert_eq!(header[1], 10);
    assert_eq!(out.lines().count(), header[0] + 1);
    assert!(err.contains("verification     pass"));
    let drawings = std::fs::read_to_string(d).unwrap();
    assert_eq!(drawings, "uniform 1 2\nmask 1 1 2\nuniform 1 2 mirrored\nmask 1 1 2 mirrored\n");
}

#[test]
fn realize_single_path() {
    let dir = tempfile::tempdir().unwrap();
    let (t, p) = (dir.path().join("t.txt"), dir.path().join("p.txt"));
    std::fs::write(&t, "3\n1 2\n2 3\n").unwrap();
    std::fs::write(&p, "1\n42 1 3\n").unwrap();
    let (code, out, _) = run(&["realize", s(&t), s(&p)]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let k: usize = lines.next().unwrap().split(' ').next().unwrap().parse().unwrap();
    assert!(lines.all(|l| l == "42"));
    assert_eq!(out.lines().count(), k + 1);
}

#[test]
fn realize_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let (t, p) = (dir.path().join("t.txt"), dir.path().join("p.txt"));
    std::fs::write(&t, "3\n1 2\n2 3\n1 3\n").unwrap();
    std::fs::write(&p, "1\n1 1 1\n").unwrap();
    let (code, _, err) = run(&["realize", s(&t), s(&p)]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("line 4"), "{err}");

    std::fs::write(&t, "3\n1 2\n2 3\n").unwrap();
    std::fs::write(&p, "2\n1 1 1\n2 1 x\n").unwrap();
    let (code, _, err) = run(&["realize", s(&t), s(&p)]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("line 3"), "{err}");

    let missing = dir.path().join("nope.txt");
    assert_eq!(run(&["realize", s(&missing), s(&p)]).0, EXIT_INVALID);
}

fn dim_of(tree: &str, paths: &str) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let (t, p) = (dir.path().join("t.txt"), dir.path().join("p.txt"));
    std::fs::write(&t, tree).unwrap();
    std::fs::write(&p, paths).unwrap();
    let (code, out, _) = run(&["dim", s(&t), s(&p)]);
    (code, out)
}

#[test]
fn dim_small_instances() {
    let (code, out) = dim_of("4\n1 2\n2 3\n3 4\n", "2\n1 1 1\n2 4 4\n");
    assert_eq!(code, 0);
    assert!(out.starts_with("dimension        2\n"), "{out}");

    let (code, out) = dim_of("5\n1 2\n2 3\n3 4\n4 5\n", "3\n1 3 3\n2 2 4\n3 1 5\n");
    assert_eq!(code, 0);
    assert!(out.starts_with("dimension        1\n"), "{out}");
}

#[test]
fn dim_p12_3() {
    let dir = tempfile::tempdir().unwrap();
    assert!(gen(dir.path(), &["--p12", "3", "1"]).status.success());
    let (t, p) = (dir.path().join("t.txt"), dir.path().join("p.txt"));
    let (code, out, _) = run(&["dim", s(&t), s(&p)]);
    assert_eq!(code, 0);
    let dim: f64 = out.lines().next().unwrap().split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!(dim > 0.664);
}

#[test]
fn dim_guard() {
    let dir = tempfile::tempdir().unwrap();
    assert!(gen(dir.path(), &["--p12", "2", "3"]).status.success());
    let (t, p) = (dir.path().join("t.txt"), dir.path().join("p.txt"));
    assert_eq!(run(&["dim", s(&t), s(&p)]).0, EXIT_GUARD);
}

#[test]
fn bound_report() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.txt");
    std::fs::write(&t, "6\n1 2\n1 3\n1 4\n1 5\n1 6\n").unwrap();
    let (code, out, _) = run(&["bound", s(&t)]);
    assert_eq!(code, 0);
    assert!(out.contains("max degree       5\n"));
    assert!(out.contains("radius           1\n"));
    assert!(out.contains("bound            7\n"));
    assert!(out.contains("dimension bound  5\n"));
}
