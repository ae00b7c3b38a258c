//! End-to-end tests of the binary: file formats, stdout contracts, and the
//! exit-code table.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cfc(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfc"))
        .args(args)
        .current_dir(dir)
        .env_remove("CFC_MAX_N")
        .env_remove("CFC_MAX_EDGES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn path_edges(n: usize) -> String {
    let mut s = format!("n {n}\n");
    for i in 1..n {
        s.push_str(&format!("{} {}\n", i - 1, i));
    }
    s
}

#[test]
fn color_then_verify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p7.edges", &path_edges(7));
    let coloring = dir.path().join("p7.coloring");

    let out = cfc(
        &["color", &graph, "-o", coloring.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(stdout(&out), "n=7 colors=3 bound=3\n");

    let out = cfc(
        &[
            "verify",
            &graph,
            coloring.to_str().unwrap(),
            "--variant",
            "vertex",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(stdout(&out), "pass\n");
}

#[test]
fn color_prints_coloring_without_output_flag() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p3.edges", &path_edges(3));
    let out = cfc(&["color", &graph], dir.path());
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\t1\n1\t2\n2\t1\nn=3 colors=2 bound=2\n");
}

#[test]
fn verify_reports_first_failing_pair() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p4.edges", &path_edges(4));
    let coloring = write(dir.path(), "all1.coloring", "0\t1\n1\t1\n2\t1\n3\t1\n");
    let out = cfc(
        &["verify", &graph, &coloring, "--variant", "vertex"],
        dir.path(),
    );
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "fail 0 1\n");
}

#[test]
fn verify_edge_variant() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "k4.edges",
        "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
    );
    let coloring = write(
        dir.path(),
        "k4.ecoloring",
        "0 1\t1\n0 2\t1\n0 3\t1\n1 2\t1\n1 3\t1\n2 3\t1\n",
    );
    let out = cfc(
        &["verify", &graph, &coloring, "--variant", "edge"],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(stdout(&out), "pass\n");

    let graph = write(dir.path(), "p3.edges", &path_edges(3));
    let coloring = write(dir.path(), "p3.ecoloring", "0 1\t1\n1 2\t1\n");
    let out = cfc(
        &["verify", &graph, &coloring, "--variant", "edge"],
        dir.path(),
    );
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "fail 0 2\n");
}

#[test]
fn parse_problems_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "bad.edges", "0 1\nnot an edge\n");
    let out = cfc(&["color", &graph], dir.path());
    assert_eq!(code(&out), 2);

    // self-loops are a validation error
    let graph = write(dir.path(), "loop.edges", "0 0\n");
    let out = cfc(&["color", &graph], dir.path());
    assert_eq!(code(&out), 2);

    // coloring domain mismatch
    let graph = write(dir.path(), "p3.edges", &path_edges(3));
    let coloring = write(dir.path(), "short.coloring", "0\t1\n1\t2\n");
    let out = cfc(
        &["verify", &graph, &coloring, "--variant", "vertex"],
        dir.path(),
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn disconnected_inputs_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "split.edges", "n 4\n0 1\n2 3\n");
    let out = cfc(&["color", &graph], dir.path());
    assert_eq!(code(&out), 3);
}

#[test]
fn exact_values_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p7.edges", &path_edges(7));
    let witness = dir.path().join("p7.witness");
    let out = cfc(
        &[
            "exact",
            &graph,
            "--invariant",
            "vcfc",
            "-o",
            witness.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).starts_with("value=3\n"), "{}", stdout(&out));

    // the witness itself must verify
    let out = cfc(
        &[
            "verify",
            &graph,
            witness.to_str().unwrap(),
            "--variant",
            "vertex",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);

    // star of order six: edge variant needs one color per leaf
    let star = write(dir.path(), "star6.edges", "n 6\n0 1\n0 2\n0 3\n0 4\n0 5\n");
    let out = cfc(&["exact", &star, "--invariant", "cfc"], dir.path());
    assert!(stdout(&out).starts_with("value=5\n"), "{}", stdout(&out));

    let out = cfc(&["exact", &graph, "--invariant", "ranking"], dir.path());
    assert!(stdout(&out).starts_with("value=3\n"), "{}", stdout(&out));
}

#[test]
fn caps_refuse_and_can_be_raised() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p11.edges", &path_edges(11));
    let out = cfc(&["exact", &graph, "--invariant", "vcfc"], dir.path());
    assert_eq!(code(&out), 4);
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("cap"),
        "stderr names the cap"
    );

    let out = cfc(
        &["exact", &graph, "--invariant", "vcfc", "--max-n", "11"],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).starts_with("value=4\n"));

    // environment variables mirror the flags
    let out = Command::new(env!("CARGO_BIN_EXE_cfc"))
        .args(["exact", &graph, "--invariant", "vcfc"])
        .env("CFC_MAX_N", "11")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("value=4\n"));
}

#[test]
fn check_sweeps_report_and_exit_clean() {
    let dir = tempfile::tempdir().unwrap();
    let out = cfc(&["check", "thm11", "5"], dir.path());
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(
        stdout(&out).contains("checked=21 violations=0"),
        "{}",
        stdout(&out)
    );

    let out = cfc(&["check", "conj14", "7"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("checked=11 violations=0"));

    let out = cfc(&["check", "conj31", "8"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("checked=23 violations=0"));

    let out = cfc(&["check", "mono", "4"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("checked=6 violations=0"));

    // report to file: stdout carries the footer only
    let report = dir.path().join("thm11.tsv");
    let out = cfc(
        &["check", "thm11", "3", "-o", report.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "checked=2 violations=0\n");
    let written = fs::read_to_string(&report).unwrap();
    assert!(written.starts_with("key\tn\tvcfc\ttwo_connected\tcut_vertices\tbound\tpass\n"));

    // over-cap orders are refused
    let out = cfc(&["check", "thm11", "9"], dir.path());
    assert_eq!(code(&out), 4);
}

#[test]
fn trees_lists_invariants_per_class() {
    let dir = tempfile::tempdir().unwrap();
    let out = cfc(&["trees", "4"], dir.path());
    assert_eq!(code(&out), 0, "{out:?}");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "graph-id\tn\tvcfc\tcfc\tranking");
    assert_eq!(lines.len(), 3);
    // the path sorts before the star: vcfc 3/2, cfc 2/3, ranking 3/2
    assert_eq!(lines[1], "((())())\t4\t3\t2\t3");
    assert_eq!(lines[2], "(()()())\t4\t2\t3\t2");
}

#[test]
fn check_reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = cfc(&["check", "conj31", "6"], dir.path());
    let b = cfc(&["check", "conj31", "6"], dir.path());
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(code(&a), 0);
}
