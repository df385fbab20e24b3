//! End-to-end tests that drive the compiled `perisplit` binary through its
//! public interface: argument parsing, JSON/CSV documents, exit codes, and
//! the golden-file comparison flow.

use std::process::{Command, Output};

fn perisplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perisplit"))
        .args(args)
        .output()
        .expect("the perisplit binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "expected success, got {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON document")
}

#[test]
fn rank_of_the_signed_splitting_ring_is_two_to_the_n_times_n_factorial() {
    let out = perisplit(&["rank", "--kind", "signed", "--n", "3"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["kind"], "B(n=3)");
    assert_eq!(doc["rank"], 48);
}

#[test]
fn probe_reports_the_equal_eigenvalue_quartic_headline() {
    let out = perisplit(&["probe", "--family", "signed-equal-eigen", "--lambda", "2"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["family"], "signed-equal-eigen");
    assert_eq!(doc["quartic"]["value"], "0");
    assert_eq!(doc["quartic"]["slope"], "16");
    // The discriminant vanishes on the equal-eigenvalue wall but only to
    // first order, so the raw slope survives alongside the quartic headline.
    assert_eq!(doc["discriminant"]["value"], "0");
    assert_eq!(doc["discriminant"]["slope"], "-2560000");
}

#[test]
fn betti_oracle_agrees_on_the_almost_regular_stratum() {
    let out = perisplit(&[
        "betti", "--n", "4", "--r", "3", "--max-i", "2", "--max-j", "4", "--oracle",
    ]);
    let doc = stdout_json(&out);
    let oracle = &doc["oracle"];
    assert_eq!(oracle["agrees"], true);
    assert!(oracle["cells_compared"].as_u64().unwrap() > 0);
    assert_eq!(oracle["mismatches"].as_array().unwrap().len(), 0);
    assert!(!doc["cells"].as_array().unwrap().is_empty());
}

#[test]
fn betti_csv_has_the_documented_header() {
    let out = perisplit(&["betti", "--n", "5", "--r", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).expect("CSV is UTF-8");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,dim,labels"));
    assert_eq!(lines.next(), Some("0,0,1,\"S()\""));
}

#[test]
fn documents_are_byte_for_byte_deterministic() {
    let betti = [
        "betti", "--n", "4", "--r", "1", "--max-i", "3", "--max-j", "6",
    ];
    assert_eq!(perisplit(&betti).stdout, perisplit(&betti).stdout);

    let sample = [
        "sample", "--n", "5", "--r", "2", "--eigen", "2,3", "--seed", "11",
    ];
    let first = perisplit(&sample);
    assert!(first.status.success());
    assert_eq!(first.stdout, perisplit(&sample).stdout);
}

#[test]
fn sample_reports_a_consistent_pfaffian_square() {
    let out = perisplit(&["sample", "--n", "4", "--r", "2", "--eigen", "2,3"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["seed"], 17, "the default seed is part of the document");
    assert!(doc["phi"].is_string());
    let sign = doc["phi_square_sign"].as_str().unwrap();
    assert!(sign == "+" || sign == "-");
}

#[test]
fn specialize_reports_the_doubled_poincare_polynomial() {
    let out = perisplit(&["specialize", "--kind", "b-fact", "--p", "2", "--q", "0"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["kind"], "BFact(p=2,q=0)");
    assert_eq!(doc["poincare"], serde_json::json!([1, 0, 1, 0, 1, 0, 1]));
    assert_eq!(doc["total"], 4);
}

#[test]
fn cohomology_profile_is_multiplicity_free() {
    let out = perisplit(&[
        "cohomology",
        "--n",
        "3",
        "--r",
        "2",
        "--max-k",
        "4",
        "--max-j",
        "4",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["multiplicity_free"], true);
    assert_eq!(doc["h_series"]["0"]["0"], 1);
}

#[test]
fn verify_quick_profile_prints_ten_lines_and_exits_cleanly() {
    let out = perisplit(&["verify", "--profile", "quick"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).expect("report is UTF-8");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    for (k, line) in lines[..10].iter().enumerate() {
        assert!(
            line.starts_with(&format!("ACCEPTANCE {} (", k + 1)),
            "unexpected line: {line}"
        );
        assert!(line.contains(": PASS"), "criterion failed: {line}");
    }
    assert_eq!(lines[10], "acceptance: 10/10 passed (quick profile)");
}

#[test]
fn exhausted_budget_exits_with_code_3() {
    let out = perisplit(&["rank", "--kind", "type-a", "--n", "3", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget"), "stderr: {err}");
}

#[test]
fn usage_errors_exit_with_code_1_and_help_with_0() {
    let missing = perisplit(&["rank"]);
    assert_eq!(missing.status.code(), Some(1));

    let unknown = perisplit(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(1));

    let help = perisplit(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn embedded_golden_documents_match_the_current_computation() {
    let out = perisplit(&["golden"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("3 golden documents match"), "stdout: {text}");
}

#[test]
fn tampered_golden_file_is_reported_with_exit_code_2() {
    let dir = tempfile::tempdir().expect("temp dir");
    let dir_arg = dir.path().to_str().unwrap();

    let write = perisplit(&["golden", "--dir", dir_arg, "--write"]);
    assert_eq!(write.status.code(), Some(0));

    let ranks = dir.path().join("ranks.json");
    let mut text = std::fs::read_to_string(&ranks).expect("golden file exists");
    text = text.replace("\"rank\": 48", "\"rank\": 47");
    assert!(
        text.contains("\"rank\": 47"),
        "fixture edit must take effect"
    );
    std::fs::write(&ranks, text).expect("rewrite golden file");

    let check = perisplit(&["golden", "--dir", dir_arg]);
    assert_eq!(check.status.code(), Some(2));
    let err = String::from_utf8_lossy(&check.stderr);
    assert!(err.contains("golden document ranks"), "stderr: {err}");
    assert!(
        err.contains("invariant violation [golden-document-drift]"),
        "stderr: {err}"
    );
}

#[test]
fn worker_thread_count_is_configurable() {
    let out = perisplit(&[
        "betti", "--n", "4", "--r", "3", "--max-i", "2", "--max-j", "4", "--oracle", "--jobs", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}
