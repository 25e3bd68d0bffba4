use std::process::Command;

use clap::Parser;
use hermdes::cli::{run, Cli};
use hermdes::export::parse_run_length;
use sha2::{Digest, Sha256};

fn run_args(args: &[&str]) -> (String, i32) {
    let cli = Cli::parse_from(std::iter::once("hermdes").chain(args.iter().copied()));
    let out = run(&cli);
    (out.output, out.code)
}

fn digest(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[test]
fn hermitian_weights_as_json() {
    let (out, code) = run_args(&["hermitian", "--m", "2", "--weights"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let counts = &v["counts"];
    assert_eq!(counts["51"], 1296);
    assert_eq!(counts["54"], 240);
    assert_eq!(counts["60"], 648);
    assert_eq!(counts["81"], 2);
    assert_eq!(v["complete"], true);
}

#[test]
fn weights_over_budget_exit_three() {
    let (out, code) = run_args(&["--budget-dim", "5", "hermitian", "--m", "2", "--weights"]);
    assert_eq!(code, 3, "{out}");
}

#[test]
fn empty_verify_is_a_usage_error() {
    let (out, code) = run_args(&["verify", "--m", "2"]);
    assert_eq!(code, 2);
    assert!(out.contains("no checks requested"));
}

#[test]
fn verify_passing_claim_exits_zero() {
    let (out, code) = run_args(&["verify", "--m", "2", "--claim", "dimension", "--claim", "s-sets"]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_grm_formulas_reports_the_boundary_failure() {
    let (out, code) = run_args(&["--format", "text", "verify", "--claim", "grm-formulas"]);
    assert_eq!(code, 1);
    let failing: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failing.len(), 1, "{out}");
    assert!(failing[0].contains("grm-dimension-l4-m2"));
}

#[test]
fn routes_print_the_same_matrix() {
    let matrices: Vec<String> = ["incidence", "squared", "trace-monomial", "defining-set"]
        .iter()
        .map(|r| {
            let (out, code) = run_args(&["design-code", "--m", "2", "--route", r, "--matrix"]);
            assert_eq!(code, 0);
            out
        })
        .collect();
    assert_eq!(matrices[0].lines().count(), 26);
    assert!(matrices.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn bad_parameters_are_usage_errors() {
    assert_eq!(run_args(&["hermitian", "--p", "4", "--m", "1"]).1, 2);
    assert_eq!(run_args(&["design-code", "--m", "4"]).1, 2);
    assert_eq!(run_args(&["s-sets", "--m", "0"]).1, 2);
    assert_eq!(run_args(&["--workers", "0", "s-sets", "--m", "2"]).1, 2);
}

#[test]
fn s_sets_text() {
    let (out, code) = run_args(&["--format", "text", "s-sets", "--m", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("counts: [4,8,10,3]"), "{out}");
    assert!(out.contains("dimension: 26"));
}

#[test]
fn csv_is_identical_across_runs_and_worker_counts() {
    let hashes: Vec<String> = ["1", "3", "1"]
        .iter()
        .map(|w| digest(&run_args(&["--workers", w, "--format", "csv", "design", "--m", "2"]).0))
        .collect();
    assert_eq!(hashes[0], hashes[1]);
    assert_eq!(hashes[0], hashes[2]);
    let enumerators: Vec<String> = ["1", "4"]
        .iter()
        .map(|w| run_args(&["--workers", w, "hermitian", "--m", "2", "--weights"]).0)
        .collect();
    assert_eq!(enumerators[0], enumerators[1]);
}

#[test]
fn design_exports_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("incidence.csv");
    let rle = dir.path().join("incidence.rle");
    let (out, code) = run_args(&[
        "design",
        "--m",
        "1",
        "--export-incidence",
        csv.to_str().unwrap(),
        "--export-run-length",
        rle.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    let summary: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(summary["b"], 18);
    assert_eq!(summary["lambda"], 5);

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    let csv_rows: Vec<Vec<u8>> = csv_text
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(csv_rows.len(), 18);
    assert!(csv_rows
        .iter()
        .all(|r| r.len() == 9 && r.iter().filter(|&&x| x == 1).count() == 5));
    let parsed = parse_run_length(&std::fs::read_to_string(&rle).unwrap()).unwrap();
    let csv_blocks: Vec<Vec<u32>> = csv_rows
        .iter()
        .map(|r| (0..9u32).filter(|&i| r[i as usize] == 1).collect())
        .collect();
    assert_eq!(parsed.v, 9);
    assert_eq!(parsed.blocks, csv_blocks);
}

#[test]
fn binary_writes_out_file_and_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_hermdes"))
        .args(["verify", "--claim", "s-sets", "--out", path.to_str().unwrap()])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["checks"].as_array().unwrap().len(), 14);

    let status = Command::new(env!("CARGO_BIN_EXE_hermdes"))
        .arg("verify")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
}
