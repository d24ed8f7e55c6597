//! The installed binary against golden files and documented exit codes.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> Vec<u8> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn check_golden(args: &[&str], name: &str) {
    let first = run(args);
    assert_eq!(first.status.code(), Some(0), "{args:?}");
    assert_eq!(first.stdout, golden(name), "{name}");
    assert_eq!(run(args).stdout, first.stdout, "{name} not stable");
}

#[test]
fn quiver_goldens() {
    check_golden(&["quiver", "--m", "9", "--l", "3", "--highlight-n", "2", "--format", "dot"], "quiver_9_3.dot");
    check_golden(&["quiver", "--m", "9", "--l", "3", "--highlight-n", "2", "--format", "json"], "quiver_9_3.json");
    check_golden(&["quiver", "--m", "9", "--l", "4", "--highlight-n", "4", "--format", "dot"], "quiver_9_4.dot");
    check_golden(&["quiver", "--m", "9", "--l", "4", "--highlight-n", "4", "--format", "json"], "quiver_9_4.json");
    check_golden(&["quiver", "--m", "3", "--l", "2", "--format", "dot"], "quiver_3_2.dot");
    check_golden(&["quiver", "--m", "3", "--l", "2", "--format", "json"], "quiver_3_2.json");
}

#[test]
fn tsv_goldens() {
    check_golden(&["ct", "build", "--m", "9", "--l", "3", "--n", "2", "--format", "tsv"], "ct_9_3_2.tsv");
    check_golden(&["ct", "build", "--m", "9", "--l", "4", "--n", "4", "--format", "tsv"], "ct_9_4_4.tsv");
    check_golden(&["ct", "build", "--m", "3", "--l", "2", "--n", "2", "--format", "tsv"], "ct_3_2_2.tsv");
    check_golden(
        &["table", "--max-m", "9", "--max-l", "4", "--max-n", "4", "--verify-up-to-m", "6"],
        "table_9_4_4.tsv",
    );
}

#[test]
fn quiver_json_shape() {
    let out = run(&["quiver", "--m", "9", "--l", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["algebra"]["m"], 9);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 24);
    assert!(v["highlights"].as_array().unwrap().is_empty());
    let dot = String::from_utf8(run(&["quiver", "--m", "9", "--l", "4", "--highlight-n", "4"]).stdout).unwrap();
    assert_eq!(dot.matches("[label=").count(), 30);
    assert_eq!(dot.matches("doublecircle").count(), 12);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["classify", "--m", "9", "--l", "3", "--n", "2"]), Some(0));
    assert_eq!(code(&["classify", "--m", "5", "--l", "3", "--n", "2"]), Some(1));
    assert_eq!(code(&["classify", "--m", "5", "--l", "5", "--n", "2"]), Some(2));
    assert_eq!(code(&["classify", "--m", "9"]), Some(2));
    assert_eq!(code(&["ct", "frobnicate", "--m", "9", "--l", "3", "--n", "2"]), Some(2));
    assert_eq!(code(&["ct", "search", "--kupisch", "1,3", "--n", "2"]), Some(2));
    assert_eq!(code(&["ct", "search", "--m", "7", "--l", "2", "--n", "2", "--budget", "0"]), Some(3));
    assert_eq!(code(&["ct", "verify", "--m", "9", "--l", "3", "--n", "2"]), Some(0));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn text_outputs() {
    let text = |args: &[&str]| String::from_utf8(run(args).stdout).unwrap();
    assert_eq!(text(&["classify", "--m", "9", "--l", "3", "--n", "2"]), "admits (n even, k=1)\n");
    assert_eq!(text(&["classify", "--m", "9", "--l", "4", "--d-rep-finite"]), "d-representation-finite, d=4\n");
    assert_eq!(text(&["classify", "--m", "9", "--l", "3", "--d-rep-finite"]), "no\n");
    assert_eq!(text(&["ct", "search", "--kupisch", "1,2,3,2,3", "--n", "2"]), "none found\n");
    assert_eq!(text(&["gldim", "--m", "9", "--l", "4"]), "4\n");
    assert_eq!(text(&["pd", "--m", "9", "--l", "3", "--i", "5", "--j", "2"]), "3\n");
    let verify = text(&["ct", "verify", "--m", "5", "--l", "3", "--n", "2"]);
    assert!(verify.contains("(a)(2) FAIL"), "{verify}");
    assert!(verify.contains("M(3,2)"));
    assert!(verify.ends_with("is_nct false\n"));
    let found = text(&["ct", "search", "--m", "4", "--l", "3", "--n", "2", "--format", "json"]);
    assert_eq!(found, "[[[1,1],[4,1],[1,2],[3,2],[1,3],[2,3]]]\n");
}
