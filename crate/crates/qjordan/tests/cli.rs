//! End-to-end tests of the command-line surface: pipelines, report shapes,
//! and the uniform exit-code contract (0 pass, 1 verified false, 2 invalid
//! input).

use std::path::Path;
use std::process::{Command, Output};

fn qjordan(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qjordan"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn make_then_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = qjordan(&["make", "--field", "3", "2", "-o", "f9.qja"], dir.path());
    assert!(out.status.success());
    let out = qjordan(&["verify", "f9.qja", "--suite", "all"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for tag in ["QJ1", "QJ2", "QJ3", "QJ2S", "QJ3S", "QJ3SS", "HUA", "DIVISION"] {
        assert!(text.contains(&format!("{tag} PASS")), "missing {tag} in:\n{text}");
    }
}

#[test]
fn make_matrix_has_dimension_four() {
    let dir = tempfile::tempdir().unwrap();
    let out = qjordan(&["make", "--matrix", "2", "2"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("dim 4"));
}

#[test]
fn verify_division_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    qjordan(&["make", "--matrix", "2", "2", "-o", "m2.qja"], dir.path());
    let out = qjordan(&["verify", "m2.qja", "--suite", "division"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("DIVISION FAIL witness="));
}

#[test]
fn verify_corrupted_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.qja"), "qja v1\np 4\n").unwrap();
    let out = qjordan(&["verify", "bad.qja"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = qjordan(&["verify", "missing.qja"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_axiom_violation_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    // Unit operator is not the identity: QJ1 fails with an empty witness.
    let text = "qja v1\np 2\nm 1\ndim 1\nunit 1\nQ 1\n0\n";
    std::fs::write(dir.path().join("bad.qja"), text).unwrap();
    let out = qjordan(&["verify", "bad.qja", "--suite", "weak"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("QJ1 FAIL witness=()"));
}

#[test]
fn isotope_preserves_weakness() {
    let dir = tempfile::tempdir().unwrap();
    qjordan(&["make", "--field", "2", "2", "-o", "f4.qja"], dir.path());
    let out = qjordan(
        &["isotope", "f4.qja", "--at", "0 1", "-o", "iso.qja"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = qjordan(&["verify", "iso.qja", "--suite", "strict"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    // Isotope at a non-invertible element is invalid input.
    qjordan(&["make", "--matrix", "2", "2", "-o", "m2.qja"], dir.path());
    let out = qjordan(
        &["isotope", "m2.qja", "--at", "0 1 0 0", "-o", "x.qja"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extend_emits_extension_field_header() {
    let dir = tempfile::tempdir().unwrap();
    qjordan(&["make", "--field", "2", "1", "-o", "f2.qja"], dir.path());
    let out = qjordan(&["extend", "f2.qja", "--degree", "2"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("m 2"));
    assert!(text.contains("modulus 1 1 1"));
    // Extending an already-extended algebra is invalid input.
    std::fs::write(dir.path().join("ext.qja"), &text).unwrap();
    let out = qjordan(&["extend", "ext.qja", "--degree", "2"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn derivations_reports_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    qjordan(&["make", "--field", "2", "2", "-o", "f4.qja"], dir.path());
    let out = qjordan(
        &["derivations", "f4.qja", "--epsilon", "minus", "--machine"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("epsilon=minus dim=2"));
    let out = qjordan(&["derivations", "f4.qja", "--epsilon", "all"], dir.path());
    assert!(stdout(&out).contains("characteristic 2"));

    qjordan(&["make", "--field", "5", "1", "-o", "f5.qja"], dir.path());
    let out = qjordan(
        &["derivations", "f5.qja", "--epsilon", "plus", "--machine"],
        dir.path(),
    );
    assert!(stdout(&out).contains("epsilon=plus dim=0"));
}

#[test]
fn moufang_summary_and_recovery() {
    let dir = tempfile::tempdir().unwrap();
    qjordan(&["make", "--field", "2", "2", "-o", "f4.qja"], dir.path());
    let out = qjordan(
        &["moufang", "f4.qja", "--proper", "--recover", "1 0", "--machine"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("points=5"));
    assert!(text.contains("order=60"));
    assert!(text.contains("proper=yes"));
    assert!(text.contains("reconstruction identical"));

    qjordan(&["make", "--field", "3", "1", "-o", "f3.qja"], dir.path());
    let out = qjordan(&["moufang", "f3.qja", "--proper", "--machine"], dir.path());
    let text = stdout(&out);
    assert!(text.contains("order=12"));
    assert!(text.contains("proper=no"));

    // Non-division input is invalid for this command.
    qjordan(&["make", "--matrix", "2", "2", "-o", "m2.qja"], dir.path());
    let out = qjordan(&["moufang", "m2.qja"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_census_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = qjordan(&["search", "--p", "2", "--n", "2"], dir.path());
    let out2 = qjordan(&["search", "--p", "2", "--n", "2"], dir.path());
    assert_eq!(out1.status.code(), Some(0));
    assert_eq!(stdout(&out1), stdout(&out2));
    assert!(stdout(&out1).contains("total=256"));
    // Unsupported space without sampling flags is invalid input.
    let out = qjordan(&["search", "--p", "2", "--n", "3"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // Sampled run is reproducible.
    let s1 = qjordan(
        &["search", "--p", "2", "--n", "3", "--sample", "10", "--seed", "42"],
        dir.path(),
    );
    let s2 = qjordan(
        &["search", "--p", "2", "--n", "3", "--sample", "10", "--seed", "42"],
        dir.path(),
    );
    assert_eq!(stdout(&s1), stdout(&s2));
}

#[test]
fn search_agreement_flag() {
    let dir = tempfile::tempdir().unwrap();
    let out = qjordan(&["search", "--p", "3", "--n", "1", "--agreement"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("agreement=yes"));
}

#[test]
fn hua_reports_skip_count() {
    let dir = tempfile::tempdir().unwrap();
    qjordan(&["make", "--field", "5", "1", "-o", "f5.qja"], dir.path());
    let out = qjordan(&["hua", "f5.qja", "--machine"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "check=HUA status=PASS skipped=4\n");
}

#[test]
fn from_linear_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    // One-dimensional idempotent: e·e = e over F_3 gives bQ_a = a²b.
    let lja = "lja v1\np 3\nm 1\ndim 1\nunit 1\nM 1\n1\n";
    std::fs::write(dir.path().join("line.lja"), lja).unwrap();
    let out = qjordan(
        &["make", "--from-linear", "line.lja", "-o", "out.qja"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = qjordan(&["verify", "out.qja", "--suite", "strict"], dir.path());
    assert_eq!(out.status.code(), Some(0));
}
