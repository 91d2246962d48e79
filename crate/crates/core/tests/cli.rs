use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monotone-norm"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "invalid json ({e}) from {args:?}: {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (code, v)
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn value(report: &Value, name: &str) -> (f64, String) {
    let v = report["values"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["name"] == name)
        .unwrap_or_else(|| panic!("no value {name} in {report}"));
    (
        v["value"].as_f64().unwrap(),
        v["exactness"].as_str().unwrap().to_string(),
    )
}

struct Files {
    _dir: TempDir,
    id2: PathBuf,
    id3: PathBuf,
    atom: PathBuf,
    row21: PathBuf,
    ones2: PathBuf,
}

fn files() -> Files {
    let dir = TempDir::new().unwrap();
    let id2 = write(
        dir.path(),
        "id2.json",
        r#"{"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}"#,
    );
    let id3 = write(dir.path(), "id3.csv", "1,0,0\n0,1,0\n0,0,1\n");
    let atom = write(dir.path(), "atom.csv", "0,0,0\n0,1,0\n0,0,0\n");
    let row21 = write(dir.path(), "row21.csv", "2,1\n0,0\n");
    let ones2 = write(dir.path(), "ones2.csv", "1,1\n1,1\n");
    Files {
        _dir: dir,
        id2,
        id3,
        atom,
        row21,
        ones2,
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn norm_closed_form_on_identity() {
    let f = files();
    let (code, r) = json(&["norm", "-m", s(&f.id2), "-p", "1", "-q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(value(&r, "full"), (1.0, "closed-form".into()));
}

#[test]
fn norm_downward_on_atom() {
    let f = files();
    let (code, r) = json(&[
        "norm",
        "-m",
        s(&f.atom),
        "-p",
        "2",
        "-q",
        "inf",
        "--downward",
    ]);
    assert_eq!(code, 0);
    assert_eq!(value(&r, "full").0, 1.0);
    let (d, tag) = value(&r, "downward");
    assert!((d - 0.5f64.sqrt()).abs() < 1e-12);
    assert_eq!(tag, "majorant-exact");
    assert!((value(&r, "gap").0 - (1.0 - 0.5f64.sqrt())).abs() < 1e-12);
}

#[test]
fn norm_verify_and_closed_method() {
    let f = files();
    let (code, r) = json(&[
        "norm",
        "-m",
        s(&f.row21),
        "-p",
        "2",
        "-q",
        "inf",
        "--verify",
    ]);
    assert_eq!(code, 0, "{r}");
    assert!(value(&r, "oracle_minus_full").0.abs() < 1e-8);
    let out = run(&[
        "norm",
        "-m",
        s(&f.id2),
        "-p",
        "2",
        "-q",
        "2",
        "--method",
        "closed",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let (code, r) = json(&[
        "norm",
        "-m",
        s(&f.id2),
        "-p",
        "2",
        "-q",
        "2",
        "--method",
        "oracle",
    ]);
    assert_eq!(code, 0);
    let (v, tag) = value(&r, "full");
    assert!((v - 1.0).abs() < 1e-9);
    assert_eq!(tag, "numerical-lower-bound");
}

#[test]
fn check_examples() {
    let f = files();
    let (code, r) = json(&["check", "-m", s(&f.id3), "-c", "2.1", "-q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["holds"], true);

    let (_, r) = json(&[
        "check",
        "-m",
        s(&f.atom),
        "-c",
        "3.6",
        "-p",
        "2",
        "--lambda",
        "2",
    ]);
    assert_eq!(r["details"]["holds"], true);
    assert_eq!(r["details"]["reports"][0]["witness"]["lambda"][0], 1);

    let (_, r) = json(&[
        "check",
        "-m",
        s(&f.atom),
        "-c",
        "3.7",
        "-p",
        "2",
        "--search-lambda",
    ]);
    assert_eq!(r["details"]["holds"], false);

    let (_, r) = json(&["check", "-m", s(&f.row21), "-c", "3.1"]);
    assert_eq!(r["details"]["holds"], true);
}

#[test]
fn check_preconditions() {
    let f = files();
    assert_eq!(
        run(&["check", "-m", s(&f.id3), "-c", "2.1"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["check", "-m", s(&f.id3), "-c", "3.6", "-p", "2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&[
            "check",
            "-m",
            s(&f.id3),
            "-c",
            "3.6",
            "-p",
            "1",
            "--lambda",
            "1"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        run(&[
            "check",
            "-m",
            s(&f.id3),
            "-c",
            "3.6",
            "-p",
            "2",
            "--lambda",
            "4"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        run(&[
            "check",
            "-m",
            s(&f.id3),
            "-c",
            "3.6",
            "-p",
            "2",
            "--lambda",
            "0"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "-m", s(&f.id3), "-c", "9.9"]).status.code(),
        Some(2)
    );
}

#[test]
fn extremal_examples() {
    let f = files();
    let (code, r) = json(&["extremal", "-m", s(&f.id2), "-p", "2", "-q", "1"]);
    assert_eq!(code, 0);
    let x = &r["details"]["extremizer"]["x"];
    let h = 0.5f64.sqrt();
    assert!(
        (x[0].as_f64().unwrap() - h).abs() < 1e-15 && (x[1].as_f64().unwrap() - h).abs() < 1e-15
    );
    assert!((value(&r, "achieved").0 - 2f64.sqrt()).abs() < 1e-15);

    let (_, r) = json(&["extremal", "-m", s(&f.row21), "-p", "2", "-q", "inf"]);
    assert!((value(&r, "achieved").0 - 5f64.sqrt()).abs() < 1e-15);
    assert_eq!(r["details"]["certifies_equality"], true);

    let (_, r) = json(&["extremal", "-m", s(&f.ones2), "-p", "inf", "-q", "1"]);
    assert_eq!(value(&r, "achieved").0, 4.0);

    let (_, r) = json(&["extremal", "-m", s(&f.atom), "-p", "2", "-q", "inf"]);
    assert_eq!(r["details"]["certifies_equality"], false);

    assert_eq!(
        run(&["extremal", "-m", s(&f.id2), "-p", "2", "-q", "2"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn oracle_examples() {
    let f = files();
    let (code, r) = json(&["oracle", "-m", s(&f.id2), "-p", "2", "-q", "2"]);
    assert_eq!(code, 0);
    assert!((value(&r, "full").0 - 1.0).abs() < 1e-6);
    let (_, r) = json(&[
        "oracle",
        "-m",
        s(&f.atom),
        "-p",
        "1",
        "-q",
        "inf",
        "--downward",
    ]);
    assert_eq!(value(&r, "downward"), (0.5, "vertex-exact".into()));
    assert_eq!(r["details"]["downward"]["method"], "VertexSimplex");
}

#[test]
fn oracle_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let m = write(
        dir.path(),
        "m.csv",
        "0.3,0.9,0.1\n0.7,0.2,0.8\n0.5,0.5,0.4\n",
    );
    let args = [
        "oracle",
        "-m",
        s(&m),
        "-p",
        "1.5",
        "-q",
        "3",
        "--downward",
        "--seed",
        "7",
        "--json",
    ];
    let a = run(&args).stdout;
    let b = bin()
        .args(args)
        .env("MONOTONE_NORM_THREADS", "1")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
}

#[test]
fn gallery_writes_matrix_and_passes() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("pi26.json");
    let (code, r) = json(&[
        "gallery",
        "pi26",
        "--size",
        "1000",
        "-p",
        "1",
        "-q",
        "1",
        "--out",
        s(&out),
    ]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["details"]["all_passed"], true);
    let (code, n) = json(&["norm", "-m", s(&out), "-p", "1", "-q", "1", "--downward"]);
    assert_eq!(code, 0);
    let full = value(&n, "full").0;
    let partial: f64 = (1..=500).map(|m| 1.0 / (m * m) as f64).sum();
    assert!((full - partial).abs() < 1e-12);

    let (code, r) = json(&["gallery", "cesaro", "--size", "100", "-p", "2", "-q", "2"]);
    assert_eq!(code, 0, "{r}");
    let (code, _) = json(&["gallery", "atom22", "--size", "3", "-p", "2", "-q", "inf"]);
    assert_eq!(code, 0);
}

#[test]
fn gallery_errors() {
    assert_eq!(run(&["gallery", "hilbert"]).status.code(), Some(2));
    assert_eq!(
        run(&["gallery", "atom22", "--size", "1"]).status.code(),
        Some(3)
    );
}

#[test]
fn verify_theorem_examples() {
    let (code, r) = json(&[
        "verify-theorem",
        "--which",
        "3.1",
        "--trials",
        "200",
        "--size",
        "6",
        "-p",
        "2",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    let ag = &r["details"]["run"]["agreement"];
    assert_eq!(
        ag["both"].as_u64().unwrap() + ag["neither"].as_u64().unwrap(),
        200
    );

    let (code, _) = json(&[
        "verify-theorem",
        "--which",
        "2.1",
        "--trials",
        "200",
        "--size",
        "6",
        "-q",
        "2",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    let (code, r) = json(&[
        "verify-theorem",
        "--which",
        "3.2",
        "--trials",
        "100",
        "--size",
        "5",
        "-p",
        "1.5",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    assert!(r["details"]["run"]["counterexamples"]
        .as_array()
        .unwrap()
        .is_empty());

    assert_eq!(
        run(&["verify-theorem", "--which", "3.1", "-p", "1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["verify-theorem", "--which", "5.0"]).status.code(),
        Some(2)
    );
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.csv", "1,2\n3\n");
    let neg = write(dir.path(), "neg.csv", "1,-2\n");
    for m in [&bad, &neg, &dir.path().join("missing.csv")] {
        assert_eq!(
            run(&["norm", "-m", s(m), "-p", "1", "-q", "1"])
                .status
                .code(),
            Some(2)
        );
    }
    let f = files();
    assert_eq!(
        run(&["norm", "-m", s(&f.id2), "-p", "0.5", "-q", "1"])
            .status
            .code(),
        Some(2)
    );
    let out = bin()
        .args(["norm", "-m", s(&f.id2), "-p", "1", "-q", "1"])
        .env("MONOTONE_NORM_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn human_output_is_a_table() {
    let f = files();
    let out = run(&[
        "norm",
        "-m",
        s(&f.atom),
        "-p",
        "2",
        "-q",
        "inf",
        "--downward",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("norm\n"));
    assert!(text.contains("downward") && text.contains("majorant-exact"));
}
