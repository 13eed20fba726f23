use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semipair"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_exact_p5() {
    let d = TempDir::new().unwrap();
    let p5 = file(&d, "p5", "5 4\n1 2\n2 3\n3 4\n4 5\n");
    let o = run(&["solve", "--algo", "exact", s(&p5)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "γpr2 = 2; pairs: (2,4)\n");
}

#[test]
fn verify_reports_pair_too_far() {
    let d = TempDir::new().unwrap();
    let p4 = file(&d, "p4", "4 3\n1 2\n2 3\n3 4\n");
    let sol = file(&d, "sol", "1\n1 4\n");
    let o = run(&["verify", s(&p4), s(&sol)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("pair-too-far"));
    let good = file(&d, "good", "1\n2 3\n");
    let o = run(&["verify", s(&p4), s(&good)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid\n");
}

#[test]
fn check_chain_p6() {
    let d = TempDir::new().unwrap();
    let p6 = file(&d, "p6", "6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let o = run(&["check-chain", s(&p6)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 ≤ 4 ≤ 4"));
}

#[test]
fn invalid_input_exits_1() {
    let d = TempDir::new().unwrap();
    let bad = file(&d, "bad", "2 1\n1 3\n");
    let o = run(&["solve", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["solve", "--bogus", s(&bad)]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let cycle = file(&d, "c3", "3 3\n1 2\n2 3\n1 3\n");
    assert_eq!(
        run(&["solve", "--algo", "tree", s(&cycle)]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["solve", "--assert-tree", s(&cycle)]).status.code(),
        Some(1)
    );
}

#[test]
fn interval_needs_model_or_ordering() {
    let d = TempDir::new().unwrap();
    let p4 = file(&d, "p4", "4 3\n1 2\n2 3\n3 4\n");
    assert_eq!(
        run(&["solve", "--algo", "interval", s(&p4)]).status.code(),
        Some(1)
    );
    let ord = file(&d, "ord", "4 3 2 1\n");
    let o = run(&["solve", "--algo", "interval", "--ordering", s(&ord), s(&p4)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("γpr2 = 2;"));
    let bad = file(&d, "bad", "1 3 2 4\n");
    assert_eq!(
        run(&["solve", "--algo", "interval", "--ordering", s(&bad), s(&p4)])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn interval_file_keeps_its_numbering() {
    let d = TempDir::new().unwrap();
    // Path 2 - 3 - 1 in model numbering.
    let iv = file(&d, "iv", "3\n5 7\n1 3\n2 6\n");
    let out = d.path().join("sol");
    let o = run(&["solve", s(&iv), "-o", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", s(&iv), s(&out)]);
    assert_eq!(stdout(&o), "valid\n");
}

#[test]
fn bound_exceeded_exits_2() {
    let d = TempDir::new().unwrap();
    let p6 = file(&d, "p6", "6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let o = run(&["solve", "--algo", "exact", "--bound", "2", s(&p6)]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["solve", "--algo", "greedy", "--bound", "2", s(&p6)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn auto_never_undercuts_exact() {
    let d = TempDir::new().unwrap();
    for seed in 0..15 {
        let g = d.path().join(format!("g{seed}"));
        let o = run(&["gen", "gnp:0.4", "9", &seed.to_string(), "-o", s(&g)]);
        assert_eq!(o.status.code(), Some(0));
        let o = run(&["--json", "solve", "--verify-small", s(&g)]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(v["cardinality"].as_u64() >= v["exact"].as_u64());
    }
}

#[test]
fn greedy_prints_certificate() {
    let d = TempDir::new().unwrap();
    let p6 = file(&d, "p6", "6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let o = run(&["solve", "--algo", "greedy", "--verify-small", s(&p6)]);
    let text = stdout(&o);
    assert!(
        text.contains("H(2Δ+2) = 2.4500, 1 + ln(2Δ+2) = 2.7918"),
        "{text}"
    );
    assert!(text.contains("achieved ratio: 1.0000"));
}

#[test]
fn reduce_then_extract() {
    let d = TempDir::new().unwrap();
    let p4 = file(&d, "p4", "4 3\n1 2\n2 3\n3 4\n");
    let (h, lab, sol) = (
        d.path().join("h"),
        d.path().join("lab"),
        d.path().join("sol"),
    );
    let o = run(&[
        "reduce",
        "--kind",
        "hardness",
        "--check",
        s(&p4),
        "-o",
        s(&h),
        "--labels",
        s(&lab),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("claimed 4, observed 4 (ok)"));
    assert_eq!(
        run(&["solve", "--algo", "greedy", s(&h), "-o", s(&sol)])
            .status
            .code(),
        Some(0)
    );
    let o = run(&["--json", "extract-ds", s(&h), s(&lab), s(&sol)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["dominating_set"].as_array().unwrap().len() <= 2);

    let bad = file(&d, "bad", "1\n1 2\n");
    assert_eq!(
        run(&["extract-ds", s(&h), s(&lab), s(&bad)]).status.code(),
        Some(2)
    );
    let o = run(&["reduce", "--kind", "bipartite", "--check", s(&p4)]);
    assert!(stdout(&o).contains("claimed 12, observed 12 (ok)"));
}

#[test]
fn outputs_are_deterministic() {
    let a = run(&["gen", "random-tree", "12", "7"]);
    let b = run(&["gen", "random-tree", "12", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let one = bin()
        .arg("bench")
        .env("SEMIPAIR_THREADS", "1")
        .output()
        .unwrap();
    let many = bin()
        .arg("bench")
        .env("SEMIPAIR_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let bad = bin()
        .arg("bench")
        .env("SEMIPAIR_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
