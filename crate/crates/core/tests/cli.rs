use std::fs;
use std::path::Path;
use std::process::Command;

use spgcd::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["spgcd"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_gcd_verify() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("inst");
    let (code, _, err) = call(&[
        "gen",
        "--n",
        "3",
        "--terms",
        "5",
        "--deg",
        "6",
        "--seed",
        "9",
        "--out-prefix",
        s(&prefix),
    ]);
    assert_eq!(code, 0, "{err}");
    let (a, b, g) = (
        dir.path().join("inst_a.poly"),
        dir.path().join("inst_b.poly"),
        dir.path().join("inst_g.poly"),
    );
    let got = dir.path().join("got.poly");
    let (code, _, err) = call(&["gcd", s(&a), s(&b), "-o", s(&got), "--seed", "1"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(
        fs::read_to_string(&got).unwrap(),
        fs::read_to_string(&g).unwrap()
    );

    let (code, out, _) = call(&["verify", s(&got), s(&a), s(&b)]);
    assert_eq!(code, 0);
    assert!(out.contains("divisibility: ok"));
    assert!(out.contains("dense gcd: agrees"));

    // A alone divides A but is not the gcd
    let (code, out, _) = call(&["verify", s(&a), s(&a), s(&b)]);
    assert_eq!(code, 3);
    assert!(out.contains("divisibility: FAILED"));
}

#[test]
fn gcd_to_stdout_matches_binary() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.poly");
    let b = dir.path().join("b.poly");
    fs::write(&a, "p 11\nn 2\n1 2 0\n1 1 1\n2 1 0\n2 0 1\n").unwrap();
    fs::write(&b, "p 11\nn 2\n1 1 1\n3 1 0\n1 0 2\n3 0 1\n").unwrap();
    let (code, out, _) = call(&["gcd", s(&a), s(&b)]);
    assert_eq!(code, 0);
    assert_eq!(out, "p 11\nn 2\n1 0 1\n1 1 0\n");

    let bin = Command::new(env!("CARGO_BIN_EXE_spgcd"))
        .args(["gcd", s(&a), s(&b)])
        .output()
        .unwrap();
    assert!(bin.status.success());
    assert_eq!(String::from_utf8(bin.stdout).unwrap(), out);
}

#[test]
fn bench_appends_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    for _ in 0..2 {
        let (code, out, err) = call(&[
            "bench",
            "--suite",
            "degree",
            "--points",
            "5",
            "--csv",
            s(&csv),
        ]);
        assert_eq!(code, 0, "{err}");
        assert!(out.starts_with("5 rows, 5 successful"));
    }
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(
        lines[0],
        "suite,n,terms,degree,seed,wall_ms,retries,success"
    );
    for row in &lines[1..] {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 8);
        assert_eq!(&cols[..4], &["degree", "6", "30", "5"]);
        assert_eq!(cols[7], "true");
    }
    // identical seeds across the two runs
    assert_eq!(lines[1].split(',').nth(4), lines[6].split(',').nth(4));

    let (code, out, _) = call(&["bench", "--suite", "vars", "--points", "--csv", s(&csv)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("0 rows"));
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(call(&[]).0, 1);
    assert_eq!(call(&["gcd"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
    let (code, _, err) = call(&["gcd", "/nonexistent/a", "/nonexistent/b"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("spgcd: "));

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.poly");
    let b = dir.path().join("b.poly");
    fs::write(&a, "p 11\nn 2\n1 1 0\n").unwrap();
    fs::write(&b, "p 13\nn 2\n1 1 0\n").unwrap();
    assert_eq!(call(&["gcd", s(&a), s(&b)]).0, 1);
    fs::write(&b, "p 11\nn 2\n11 1 0\n").unwrap();
    let (code, _, err) = call(&["gcd", s(&a), s(&b)]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(
        call(&[
            "bench",
            "--suite",
            "terms",
            "--csv",
            s(&a),
            "--time-limit",
            "-1"
        ])
        .0,
        1
    );
}
