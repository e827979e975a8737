use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn ribbondm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbondm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ribbondm-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn dm_of_twisted_loop_file() {
    let p = scratch("bouquet.rg", "ribbon v1\nvertex e+ e-\n");
    let o = ribbondm(&["dm", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ground e\nfeasible -\nfeasible e\n");
}

#[test]
fn two_iso_reports_evenness_and_exits_one() {
    let g1 = scratch("g1.rg", "ribbon v1\nvertex e+ e+\n");
    let g2 = scratch("g2.rg", "ribbon v1\nvertex e+ e-\n");
    let o = ribbondm(&["two-iso", g1.to_str().unwrap(), g2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("evenness"));
}

#[test]
fn two_iso_certificate_lines() {
    let o = ribbondm(&[
        "--structured",
        "two-iso",
        "a+ a+ / b+ c+ / b+ c+",
        "a+ a+ b+ c+ / b+ c+",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("record=two-isomorphic\tvalue=true"));
    assert!(out.contains("record=move\tstep=1\tkind=join"));
}

#[test]
fn verify_suite_exits_zero() {
    let o = ribbondm(&["verify", "--suite", "thm2.2-dual", "--max-edges", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn verify_structured_is_stable_across_threads() {
    let run = |t: &str| {
        stdout(&ribbondm(&[
            "--structured",
            "verify",
            "--suite",
            "thm2.2-petrial",
            "--max-edges",
            "2",
            "--threads",
            t,
        ]))
    };
    let a = run("1");
    assert_eq!(a, run("3"));
    assert_eq!(a, run("1"));
    for line in a.lines() {
        assert!(line.split('\t').all(|f| f.contains('=')), "{line}");
    }
}

#[test]
fn error_exit_codes() {
    assert_eq!(ribbondm(&["frobnicate"]).status.code(), Some(2));
    let bad = scratch("bad.rg", "ribbon v1\nvertex a+ b+\n");
    let o = ribbondm(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = ribbondm(&["enumerate", "--max-edges", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
    assert_eq!(
        ribbondm(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn iso_and_info() {
    assert_eq!(
        ribbondm(&["iso", "a+ b+ a+ b+", "x- y- x- y-"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        ribbondm(&["iso", "a+ b+ a+ b+", "a+ a+ b+ b+"])
            .status
            .code(),
        Some(1)
    );
    let out = stdout(&ribbondm(&["info", "a+ b+ a+ b+"]));
    assert!(out.contains("orientable yes") && out.contains("euler_genus 2"));
}

#[test]
fn dual_round_trip_through_files() {
    let g = "ribbon v1\nvertex a+ b- a+ c+\nvertex b+ c-\n";
    let o = ribbondm(&["dual", g, "--set", "a,c"]);
    assert_eq!(o.status.code(), Some(0));
    let once = scratch("dual.rg", &stdout(&o));
    let back = stdout(&ribbondm(&["dual", once.to_str().unwrap(), "--set", "a,c"]));
    assert_eq!(ribbondm(&["iso", &back, g]).status.code(), Some(0));
}

#[test]
fn poly_and_tutte_agree_on_plane_graph() {
    let g = "a+ b+ / b+ c+ / c+ a+";
    let br = stdout(&ribbondm(&["poly", g]));
    let t = stdout(&ribbondm(&["poly", "--tutte", g]));
    assert_eq!(br, t);
    assert_eq!(br.trim(), "1*x^2 + 1*x + 1*y");
}

#[test]
fn enumerate_and_witness() {
    let o = ribbondm(&["enumerate", "--max-edges", "1", "--max-vertices", "2"]);
    assert_eq!(stdout(&o).lines().count(), 7);
    let o = ribbondm(&[
        "witness",
        "ground e / feasible - / feasible e",
        "--max-edges",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ribbon v1\nvertex e+ e-\n");
}

#[test]
fn mutants_of_word_literal() {
    let o = ribbondm(&["mutants", "word:1+ 1+ 2+ 2+ 3+ 3-"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.lines()
            .any(|l| ribbondm(&["iso", l, "1+ 1+ 2+ 3+ 3+ 2-"]).status.success()),
        "{out}"
    );
}
