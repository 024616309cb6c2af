use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use madweight::{parse_graph, parse_rational, Rational};

fn madw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_madw")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K2: &str = "e 0 1\n";
const K4: &str = "e 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";
const C5: &str = "# five-cycle\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n";

#[test]
fn mad_of_k4() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k4.g", K4);
    let o = madw(&["mad", s(&f)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "3/1 0 1 2 3\n");
}

#[test]
fn solve_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.g", C5);
    for (mode, level) in [("12", "83"), ("123", "83"), ("12", "52"), ("123", "52")] {
        let o = madw(&["solve", "--mode", mode, "--level", level, s(&g)]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        let w = write(dir.path(), "w.txt", &stdout(&o));
        let v = madw(&["verify", "--mode", mode, s(&g), s(&w)]);
        assert_eq!(code(&v), 0);
        assert_eq!(stdout(&v), "");
    }
}

#[test]
fn solve_trace_goes_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.g", C5);
    let o = madw(&["solve", "--mode", "12", "--level", "83", "--trace", s(&g)]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).lines().next().unwrap().starts_with("W2_83."));
    assert!(stdout(&o).lines().all(|l| l.starts_with("edge ") || l.starts_with("vertex ")));
}

#[test]
fn solve_refusals_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.g", K4);
    let k2 = write(dir.path(), "k2.g", K2);
    assert_eq!(code(&madw(&["solve", "--mode", "12", "--level", "83", s(&k4)])), 1);
    assert_eq!(code(&madw(&["solve", "--mode", "123", "--level", "83", s(&k2)])), 1);
    assert_eq!(code(&madw(&["solve", "--mode", "12", "--level", "83", s(&k2)])), 0);
}

#[test]
fn verify_reports_the_isolated_edge() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k2.g", K2);
    let w = write(dir.path(), "w.txt", "edge 0 1 2\n");
    let o = madw(&["verify", "--mode", "123", s(&g), s(&w)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).lines().count(), 1);
    let bad = write(dir.path(), "bad.txt", "edge 0 1 4\n");
    assert_eq!(code(&madw(&["verify", "--mode", "123", s(&g), s(&bad)])), 2);
}

#[test]
fn detect_prints_instances() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.g", C5);
    let o = madw(&["detect", "--catalog", "3w52", s(&g)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(!out.is_empty());
    assert!(out.lines().all(|l| l.starts_with("W3_52.") && l.contains(" core=[")));
    let k4 = write(dir.path(), "k4.g", K4);
    let o = madw(&["detect", "--catalog", "3w83", s(&k4)]);
    assert_eq!((code(&o), stdout(&o)), (1, String::new()));
}

#[test]
fn oracle_counts_small_cases() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k2.g", K2);
    let o = madw(&["oracle", "--mode", "123", "--count", s(&g)]);
    assert_eq!((code(&o), stdout(&o)), (1, "0\n".to_string()));
    // Total weightings of K2: the two vertex weights must differ, edge free.
    let mut expected = 0;
    for a in 1..=2 {
        for b in 1..=2 {
            for e in 1..=2 {
                if a + e != b + e {
                    expected += 1;
                }
            }
        }
    }
    let o = madw(&["oracle", "--mode", "12", "--count", s(&g)]);
    assert_eq!((code(&o), stdout(&o)), (0, format!("{expected}\n")));
    let o = madw(&["oracle", "--mode", "12", s(&g)]);
    assert_eq!(code(&o), 0);
    let w = write(dir.path(), "w.txt", &stdout(&o));
    assert_eq!(code(&madw(&["verify", "--mode", "12", s(&g), s(&w)])), 0);
}

#[test]
fn discharge_prints_charges_and_minimum() {
    let dir = tempfile::tempdir().unwrap();
    // A vertex with three pendants and one long arm.
    let g = write(dir.path(), "p.g", "e 0 1\ne 0 2\ne 0 3\ne 0 4\ne 4 5\ne 5 6\ne 6 0\n");
    let o = madw(&["discharge", "--rules", "r83-123", s(&g)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    let mut total = Rational::from(0);
    let mut least: Option<Rational> = None;
    for l in &lines[..7] {
        let f: Vec<&str> = l.split(' ').collect();
        assert_eq!(f.len(), 3);
        let fin = parse_rational(f[2]).unwrap();
        total += fin;
        least = Some(least.map_or(fin, |m: Rational| m.min(fin)));
    }
    assert_eq!(total, Rational::from(14));
    assert_eq!(lines[7], format!("min {}/{}", least.unwrap().numer(), least.unwrap().denom()));
    let o = madw(&["discharge", "--rules", "r83-123", "--check-catalog", s(&g)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("verdict config-present\n"));
}

#[test]
fn gen_round_trips_and_is_reproducible() {
    let a = madw(&["gen", "random-mad", "--n", "30"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stderr(&a), "seed 1\n");
    let b = madw(&["gen", "random-mad", "--n", "30", "--seed", "1"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stderr(&b), "");
    let g = parse_graph(&stdout(&a)).unwrap();
    assert_eq!(g.n(), 30);
    for args in [
        vec!["gen", "cycle", "--n", "7"],
        vec!["gen", "tree", "--n", "9", "--seed", "4"],
        vec!["gen", "cubic-pendants", "--n", "5"],
        vec!["gen", "gadget", "--side", "right"],
        vec!["gen", "host", "--kind", "W3_83.uK", "--variant", "2"],
    ] {
        let o = madw(&args);
        assert_eq!(code(&o), 0, "{args:?}: {}", stderr(&o));
        parse_graph(&stdout(&o)).unwrap();
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&madw(&["solve", "--mode", "7", "--level", "83", "x"])), 2);
    assert_eq!(code(&madw(&["mad", "/nonexistent/graph.g"])), 2);
    assert_eq!(code(&madw(&["gen", "host"])), 2);
    assert_eq!(code(&madw(&[])), 2);
}
