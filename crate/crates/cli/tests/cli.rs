use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const WORKED: &str = r#"{"n": 3, "A": [[0, 1, 1], [2, 0, 2], [-2, -5, 0]], "q": [-4, -7, 10]}"#;

fn lcplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcplab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn line_of<'a>(text: &'a str, class: &str) -> &'a str {
    text.lines()
        .find(|l| l.split_whitespace().next() == Some(class))
        .unwrap_or_else(|| panic!("{class} in {text}"))
}

#[test]
fn classify_worked_matrix() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", WORKED);
    let json = dir.path().join("report.json");
    let o = lcplab(&["classify", "-i", s(&input), "--json", s(&json)]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let out = stdout(&o);
    assert!(line_of(&out, "E0s-tilde").contains("true"));
    assert!(line_of(&out, "R0").contains("false"));
    assert!(line_of(&out, "Q0").contains("true (partial)"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(report["n"], 3);
    assert_eq!(report["game"]["value"], "0");
}

#[test]
fn classify_prints_witness() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", r#"{"n": 3, "A": [[0, 2, -1], [1, 0, -1], [1, 1, 0]]}"#);
    let out = stdout(&lcplab(&["classify", "-i", s(&input)]));
    let line = line_of(&out, "E0s");
    assert!(line.contains("false") && line.contains("x = ("), "{line}");
}

#[test]
fn malformed_input_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", "{\n  \"n\": 2,\n  \"A\": [[1, 2], [3 4]]\n}");
    let o = lcplab(&["classify", "-i", s(&input)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = lcplab(&["classify", "-i", s(&dir.path().join("missing.json"))]);
    assert_eq!(o.status.code(), Some(3));
    let o = lcplab(&["solve", "-i", s(&write(&dir, "b.json", r#"{"n": 1, "A": [[1]]}"#))]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn interior_point_solve_with_trace() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", WORKED);
    let trace = dir.path().join("trace.csv");
    let o = lcplab(&[
        "solve",
        "-i",
        s(&input),
        "--method",
        "ipm",
        "--beta",
        "0.5",
        "--sigma",
        "0.2",
        "--eps",
        "1e-5",
        "--z0",
        "1,1,5",
        "--trace",
        s(&trace),
    ]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert!(stdout(&o).starts_with("z = (1.0714, 1.5714, 2.4286)"), "{}", stdout(&o));
    let csv = std::fs::read_to_string(trace).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("k,z1,z2,z3,w1,w2,w3,kappa,tau,m,psi,ztw"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first.len(), 12);
    assert_eq!(&first[..7], &["0", "1", "1", "5", "2", "5", "3"]);
    assert!(csv.lines().last().unwrap().contains(",,,"));
}

#[test]
fn exact_solves() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", WORKED);
    let o = lcplab(&["solve", "-i", s(&input), "--method", "lemke"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("z = (0, 2, 7/2)"), "{}", stdout(&o));
    let out = stdout(&lcplab(&["solve", "-i", s(&input), "--method", "enumerate"]));
    assert!(out.starts_with("z = (15/14, 11/7, 17/7)\nw = (0, 0, 0)"), "{out}");
    assert!(out.contains("3 solutions"));
    let pos = write(&dir, "p.json", r#"{"n": 2, "A": [[1, -3], [2, -1]], "q": ["1/2", 0]}"#);
    assert!(stdout(&lcplab(&["solve", "-i", s(&pos)])).starts_with("z = (0, 0)"));
}

#[test]
fn infeasible_and_stalled_exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", r#"{"n": 2, "A": [[0, -1], [-1, 0]], "q": [-1, -1]}"#);
    let o = lcplab(&["solve", "-i", s(&input), "--method", "lemke"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("secondary ray"));
    assert_eq!(
        lcplab(&["solve", "-i", s(&input), "--method", "enumerate"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lcplab(&["solve", "-i", s(&input), "--method", "ipm"]).status.code(),
        Some(2)
    );
    let worked = write(&dir, "w.json", WORKED);
    let o = lcplab(&[
        "solve",
        "-i",
        s(&worked),
        "--method",
        "ipm",
        "--z0",
        "1,1,5",
        "--max-iter",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(
        lcplab(&["solve", "-i", s(&worked), "--method", "ipm", "--beta", "1.5"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn pivot_and_game() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "a.json",
        r#"{"n": 3, "A": [[0, 1, 1], [2, 0, 1], [-1, -1, 0]], "q": [1, 1, 1]}"#,
    );
    let o = lcplab(&["ppt", "-i", s(&input), "--alpha", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("[-1/3  1/3 -1/3]\n[ 1/3 -1/3 -2/3]\n[ 2/3  1/3  2/3]"),
        "{}",
        stdout(&o)
    );
    let singular = write(&dir, "s.json", r#"{"n": 2, "A": [[0, 1], [1, 0]]}"#);
    assert_eq!(
        lcplab(&["ppt", "-i", s(&singular), "--alpha", "1"]).status.code(),
        Some(3)
    );
    assert_eq!(
        lcplab(&["ppt", "-i", s(&singular), "--alpha", "4"]).status.code(),
        Some(3)
    );
    let game = write(&dir, "g.json", r#"{"n": 3, "A": [[0, 2, 1], [1, 0, 1], [-2, -2, 1]]}"#);
    assert!(stdout(&lcplab(&["game", "-i", s(&game)])).starts_with("value = 1\n"));
}

#[test]
fn generation_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = lcplab(&[
            "gen",
            "--random",
            "--class",
            "P0",
            "--n",
            "3",
            "--seed",
            "7",
            "-o",
            s(p),
        ]);
        assert_eq!(o.status.code(), Some(0), "{o:?}");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(line_of(&stdout(&lcplab(&["classify", "-i", s(&a)])), "P0").contains("true"));

    let o = lcplab(&["gen", "--structured", "--n", "4", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let st = write(&dir, "st.json", &stdout(&o));
    assert!(line_of(&stdout(&lcplab(&["classify", "-i", s(&st)])), "E0s-tilde").contains("true"));

    let o = lcplab(&["gen", "--random", "--class", "P", "--n", "5", "--budget", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("in 2 draws"));
    assert_eq!(
        lcplab(&["gen", "--random", "--class", "nonsense"]).status.code(),
        Some(3)
    );
}

#[test]
fn reproduction_table() {
    let o = lcplab(&["reproduce-paper"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(!out.contains("FAIL"));
    let listed = stdout(&lcplab(&["reproduce-paper", "--list"]));
    assert_eq!(listed.lines().count(), lcplab::reproduce::checks().len());
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() == listed.lines().count());
}
