//! End-to-end runs of the binary: output shapes, JSON validity, exit codes.

use std::process::{Command, Output};

use serde_json::Value;

fn ecci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is one JSON document")
}

#[test]
fn compute_family_text_and_json() {
    let out = ecci(&["compute", "--family", "path", "--n", "11"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("xi = 150"), "{text}");
    assert!(text.contains("radius = 5"), "{text}");

    let out = ecci(&["--json", "compute", "--family", "path", "--n", "11", "--profile"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["xi"], 150);
    assert_eq!(doc["diameter"], 10);
    assert_eq!(doc["eccentricities"].as_array().unwrap().len(), 11);
}

#[test]
fn compute_reads_edge_list_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("spider.tree");
    // starlike with legs 3, 2, 2
    std::fs::write(&file, "8\n0 1\n1 2\n2 3\n0 4\n4 5\n0 6\n6 7\n").unwrap();
    let out = ecci(&["--json", "compute", "--file", file.to_str().unwrap(), "--oracle"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["xi"], 54);
    assert_eq!(doc["oracle_agrees"], true);

    std::fs::write(&file, "4\n0 1\n2 3\n9 9\n").unwrap();
    let out = ecci(&["compute", "--file", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_without_a_source_is_a_usage_error() {
    let out = ecci(&["compute"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ecci(&["compute", "--family", "broom", "--n", "11"]);
    assert_eq!(out.status.code(), Some(2), "missing delta");
}

#[test]
fn enum_counts_and_emits() {
    let out = ecci(&["--json", "enum", "--n", "9", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["count"], 47);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("deg3.trees");
    let out = ecci(&[
        "--json", "enum", "--n", "8", "--max-degree", "3",
        "--emit", file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    let emitted = std::fs::read_to_string(&file).unwrap();
    let docs: Vec<&str> =
        emitted.split("\n\n").filter(|chunk| !chunk.trim().is_empty()).collect();
    assert_eq!(docs.len() as u64, doc["count"].as_u64().unwrap());
    for chunk in docs {
        let t: ecci::Tree = chunk.parse().unwrap();
        assert_eq!(t.n(), 8);
        assert_eq!(t.max_degree(), 3);
    }
}

#[test]
fn enum_exit_codes() {
    let out = ecci(&["enum", "--n", "6", "--max-degree", "9"]);
    assert_eq!(out.status.code(), Some(3), "empty class");
    let out = ecci(&["enum", "--n", "40"]);
    assert_eq!(out.status.code(), Some(2), "over the cap without --force");
    let out = ecci(&["enum"]);
    assert_eq!(out.status.code(), Some(2), "missing --n");
}

#[test]
fn extremal_reproduces_published_minima() {
    let out = ecci(&[
        "--json", "extremal", "--n", "11", "--max-degree", "3",
        "--objective", "min", "--witnesses", "3", "--threads", "2",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["value"], 79);
    assert_eq!(doc["count"], 3);
    assert_eq!(doc["witnesses"].as_array().unwrap().len(), 3);

    let out = ecci(&["extremal", "--n", "5", "--max-degree", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_single_claim_and_errata_policy() {
    let out = ecci(&["--json", "verify", "--claim", "thm-volkmann", "--max-n", "10"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["ok"], true);
    assert_eq!(doc["verdicts"][0]["status"], "PASS");

    // an expected erratum exits 0
    let out = ecci(&["verify", "--claim", "cor-radius", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("ERRATUM"));

    // the same erratum exits 1 when not expected
    let out = ecci(&[
        "verify", "--claim", "cor-radius", "--max-n", "8",
        "--expect-errata", "thm-matching",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = ecci(&["verify", "--claim", "thm-made-up"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_table_slice() {
    let out = ecci(&["--json", "verify", "--claim", "table1", "--max-n", "11"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    let verdicts = doc["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 9, "nine cells for n = 11");
    assert!(verdicts.iter().all(|v| v["status"] == "PASS"));
}

#[test]
fn bench_runs_and_cross_checks() {
    let out = ecci(&[
        "--json", "bench", "--family", "volkmann", "--n", "2000", "--delta", "4",
        "--repeat", "2", "--compare-oracle",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["oracle_agrees"], true);
    assert_eq!(doc["runs_ns"].as_array().unwrap().len(), 2);

    let out = ecci(&["bench", "--family", "path", "--n", "9999", "--compare-oracle"]);
    assert_eq!(out.status.code(), Some(2), "oracle comparison is capped");
    let out = ecci(&["bench", "--family", "wheel", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2), "unknown bench family");
}

#[test]
fn bare_invocation_is_a_usage_error() {
    let out = ecci(&[]);
    assert_eq!(out.status.code(), Some(2));
}
