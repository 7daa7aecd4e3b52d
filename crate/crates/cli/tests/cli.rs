//! End-to-end tests of the `affdim` binary: document shapes, exit codes,
//! and the JSON round-trip back into `classify`.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_affdim"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn affdim")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON: {e}\n{}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

#[test]
fn classify_published_subset_design() {
    let out = run(&["classify", fixture("four_factor_r7.txt").to_str().unwrap()]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["class"], "subset");
    assert_eq!(doc["relations"][0]["word"], serde_json::json!([1, 2, 3]));
    assert_eq!(doc["relations"][0]["sign"], 1);
    assert_eq!(doc["affine_dimension"], 3);
    assert_eq!(doc["identifiable"], true);
}

#[test]
fn classify_missing_file_exits_1() {
    let out = run(&["classify", "/no/such/file.txt"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert!(doc["error"].as_str().unwrap().contains("cannot read"));
}

#[test]
fn classify_duplicate_run_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.txt");
    std::fs::write(&path, "1 1\n1 1\n").unwrap();
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_json(&out)["error"]
        .as_str()
        .unwrap()
        .contains("duplicates"));
}

#[test]
fn bounds_single_run() {
    let out = run(&["bounds", "--runs", "6"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["bound"], "EhlichWojtas");
    assert_eq!(doc["value"].as_u64(), Some(160));
    assert_eq!(doc["two_adic_valuation"], 5);
    assert_eq!(doc["mod8_prediction"], "affinely-full-dimensional");
}

#[test]
fn bounds_range_is_array() {
    let out = run(&["bounds", "--range", "5..8"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let rows = doc.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["bound"], "Barba");
    assert_eq!(rows[0]["value"].as_u64(), Some(48));
    assert_eq!(rows[2]["bound"], "None"); // r = 7
    assert_eq!(rows[3]["bound"], "Hadamard");
    assert_eq!(rows[3]["value"].as_u64(), Some(4096));
}

#[test]
fn bounds_needs_exactly_one_selector() {
    let out = run(&["bounds"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_d_and_json_roundtrip_to_classify() {
    let out = run(&[
        "search",
        "--factors",
        "3",
        "--runs",
        "4",
        "--criterion",
        "d",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["value"].as_u64(), Some(256));
    assert_eq!(doc["exhaustive"], true);

    // Feed the reported design straight back into classify.
    let rows = doc["design"].as_array().unwrap();
    let text: String = rows
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("echo.txt");
    std::fs::write(&path, text).unwrap();
    let reclass = run(&["classify", path.to_str().unwrap()]);
    assert!(reclass.status.success());
    let reclass_doc = stdout_json(&reclass);
    assert_eq!(reclass_doc["class"], doc["class"]);
}

#[test]
fn search_a_reports_exact_rational() {
    let out = run(&[
        "search",
        "--factors",
        "4",
        "--runs",
        "5",
        "--criterion",
        "a",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["value"]["numerator"].as_u64(), Some(10));
    assert_eq!(doc["value"]["denominator"].as_u64(), Some(9));
}

#[test]
fn search_e_reports_interval() {
    let out = run(&[
        "search",
        "--factors",
        "2",
        "--runs",
        "4",
        "--criterion",
        "e",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["value"]["exact"], true);
    assert_eq!(doc["value"]["lo"], "4/1");
    assert_eq!(doc["value"]["approx"], 4.0);
}

#[test]
fn search_budget_exceeded_exits_2() {
    let out = run(&[
        "search",
        "--factors",
        "5",
        "--runs",
        "10",
        "--criterion",
        "d",
        "--budget",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_json(&out)["error"]
        .as_str()
        .unwrap()
        .contains("budget"));
}

#[test]
fn search_threads_give_same_document() {
    let a = run(&[
        "search",
        "--factors",
        "4",
        "--runs",
        "6",
        "--criterion",
        "d",
    ]);
    let b = run(&[
        "search",
        "--factors",
        "4",
        "--runs",
        "6",
        "--criterion",
        "d",
        "--threads",
        "4",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn maxdet_exhaustive_small() {
    let out = run(&["maxdet", "--runs", "5"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["method"], "exhaustive");
    assert_eq!(doc["max_abs_det"].as_u64(), Some(48));
    assert_eq!(doc["exhaustive"], true);
}

#[test]
fn maxdet_local_hits_target() {
    let out = run(&[
        "maxdet", "--runs", "7", "--local", "--target", "576", "--seed", "0",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["method"], "local-search");
    assert_eq!(doc["max_abs_det"].as_u64(), Some(576));
    assert_eq!(doc["target_reached"], true);
    assert_eq!(doc["seed"], 0);
}

#[test]
fn conjecture_small_range() {
    let out = run(&["conjecture", "--runs", "4..6"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        assert_eq!(row["verified"], true);
        assert_eq!(row["agrees"], true);
        assert_eq!(row["method"], "exhaustive");
    }
}

#[test]
fn conjecture_text_format() {
    let out = run(&["conjecture", "--runs", "5", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("method"));
    assert!(text.contains("exhaustive"));
}

#[test]
fn conjecture_unknown_target_exits_2() {
    let out = run(&["conjecture", "--runs", "14"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn indicator_terms_sorted_and_exact() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("half.txt");
    std::fs::write(&path, "1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n").unwrap();
    let out = run(&["indicator", path.to_str().unwrap()]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let terms = doc.as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["word"], serde_json::json!([]));
    assert_eq!(terms[0]["coefficient"], "0.5");
    assert_eq!(terms[1]["word"], serde_json::json!([1, 2, 3]));
    assert_eq!(terms[1]["numerator"], 4);
    assert_eq!(terms[1]["coefficient"], "0.5");
}

#[test]
fn unknown_flag_exits_1() {
    let out = run(&["classify", "--frobnicate", "x"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["bounds", "--runs", "10", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["value"].as_u64(), Some(73_728));
}
