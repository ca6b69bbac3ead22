//! End-to-end tests of the binary: output shapes, exit codes, pipelines.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sigma-trees"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("stdout is UTF-8")
}

#[test]
fn bound_reports_tight_residue_one() {
    let out = run(&["bound", "--n", "9", "--delta", "4"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(report["sigma_bound"], "62");
    assert_eq!(report["status"], "tight (n≡1 mod Δ)");
    assert_eq!(report["sigma_max"], "62");
    assert_eq!(report["m_1_delta"], "6");
    assert_eq!(report["m_2_delta"], "2");
}

#[test]
fn bound_covers_residue_zero_and_flags_the_rest() {
    let out = run(&["bound", "--n", "8", "--delta", "4"]);
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(report["status"], "covered (n≡0 mod Δ)");
    assert_eq!(report["sigma_max"], "54");
    assert_eq!(report["sigma_bound"], "111/2");

    let out = run(&["bound", "--n", "10", "--delta", "4"]);
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(report["status"], "not covered (strict upper bound)");
    assert_eq!(report["sigma_bound"], "137/2");
    assert!(report.get("sigma_max").is_none());
}

#[test]
fn construct_pipes_into_sigma() {
    let out = run(&["construct", "tt1", "--k", "2", "--delta", "4"]);
    assert!(out.status.success());
    let line = stdout_of(&out).trim().to_string();
    assert_eq!(line.lines().count(), 1);

    let sigma = run_with_stdin(&["sigma"], &format!("{line}\n"));
    assert!(sigma.status.success());
    let record: serde_json::Value =
        serde_json::from_str(stdout_of(&sigma).lines().next().unwrap()).unwrap();
    assert_eq!(record["n"], 9);
    assert_eq!(record["sigma"], 62);
}

#[test]
fn profile_reports_penalty_against_chosen_certificate() {
    let tree = run(&["construct", "tt0", "--k", "2", "--delta", "4", "--position", "3"]);
    let line = stdout_of(&tree).trim().to_string();

    let out = run_with_stdin(&["profile", "--delta", "4"], &format!("{line}\n"));
    assert!(out.status.success());
    let record: serde_json::Value =
        serde_json::from_str(stdout_of(&out).lines().next().unwrap()).unwrap();
    assert_eq!(record["penalty"], "3/2");
    assert_eq!(record["sigma"], 80);
    assert_eq!(record["profile"]["n"], 12);
    assert_eq!(record["profile"]["pair_counts"][0][0], 1);

    // without --delta the penalty field is absent
    let out = run_with_stdin(&["profile"], &format!("{line}\n"));
    let record: serde_json::Value =
        serde_json::from_str(stdout_of(&out).lines().next().unwrap()).unwrap();
    assert!(record.get("penalty").is_none());
}

#[test]
fn enumerate_counts_free_trees() {
    let out = run(&["enumerate", "--n", "7"]);
    assert_eq!(stdout_of(&out).lines().count(), 11);
    // three spiders, two double-branch trees, and the path
    let out = run(&["enumerate", "--n", "7", "--max-degree", "3"]);
    assert_eq!(stdout_of(&out).lines().count(), 6);
}

#[test]
fn enumerated_lines_round_trip_through_sigma() {
    let out = run(&["enumerate", "--n", "8"]);
    let lines = stdout_of(&out).to_string();
    let sigma = run_with_stdin(&["sigma"], &lines);
    assert!(sigma.status.success());
    assert_eq!(stdout_of(&sigma).lines().count(), 23);
}

#[test]
fn search_embeds_extremal_set_and_bound() {
    let out = run(&["search", "--n", "9", "--delta", "4", "--exact-delta"]);
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(report["tree_count"], 17);
    assert_eq!(report["sigma_max"], 62);
    assert_eq!(report["bound"], "62");
    assert_eq!(report["bound_status"]["status"], "tight");
    assert_eq!(report["extremal_trees"].as_array().unwrap().len(), 1);

    // the embedded graph6 re-checks offline
    let g6 = report["extremal_trees"][0]["graph6"].as_str().unwrap();
    let sigma = run_with_stdin(&["sigma"], &format!("{g6}\n"));
    let record: serde_json::Value =
        serde_json::from_str(stdout_of(&sigma).lines().next().unwrap()).unwrap();
    assert_eq!(record["sigma"], 62);
}

#[test]
fn scan_csv_has_one_row_per_order() {
    let out = run(&["scan", "--delta", "4", "--k", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("delta,n,k,"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4); // n = 5..=8
    assert!(rows[0].starts_with("4,5,1,1,1,36,36,tight"));
    assert!(rows[3].starts_with("4,8,1,0,7,54,111/2,gap,3/2"));
}

#[test]
fn scan_k_range_forms_agree() {
    let a = run(&["scan", "--delta", "4", "--k", "1..3", "--format", "csv"]);
    let b = run(&["scan", "--delta", "4", "--k", "1..=2", "--format", "csv"]);
    assert_eq!(stdout_of(&a), stdout_of(&b));
    assert_eq!(stdout_of(&a).lines().count(), 9); // header + 8 orders
}

#[test]
fn verify_lemmas_passes_and_reports_six() {
    let out = run(&["verify-lemmas", "--delta-max", "30"]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    let ids: Vec<&str> = reports
        .iter()
        .map(|r| r["lemma_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["F-nonneg", "L4.2", "L4.3", "L4.4", "L4.5", "L4.6"]);
    for r in reports {
        assert_eq!(r["status"], "pass", "{}", r["lemma_id"]);
        assert_eq!(r["witnesses"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn exit_codes_separate_domain_usage_and_success() {
    // domain: no tree of order 4 with maximum degree 4
    let out = run(&["bound", "--n", "4", "--delta", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("maximum degree"));

    // domain: size guard
    let out = run(&["search", "--n", "30", "--delta", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));

    // usage: unknown subcommand, handled by the parser
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // usage: csv outside scan
    let out = run(&["bound", "--n", "9", "--delta", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));

    // domain: malformed graph6 (a cycle, not a tree)
    let out = run_with_stdin(&["sigma"], "Cl\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_byte_stable_without_timestamps() {
    let a = run(&["search", "--n", "8", "--delta", "4"]);
    let b = run(&["search", "--n", "8", "--delta", "4"]);
    assert_eq!(a.stdout, b.stdout);

    let t = run(&["bound", "--n", "9", "--delta", "4", "--timestamps"]);
    let report: serde_json::Value = serde_json::from_str(stdout_of(&t)).unwrap();
    assert!(report["generated_at"].is_u64());
    assert_eq!(report["report"]["sigma_bound"], "62");
}

#[test]
fn out_flag_writes_file_and_in_flag_reads_file() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "bound",
        "--n",
        "9",
        "--delta",
        "4",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["sigma_bound"], "62");

    let trees_path = dir.path().join("trees.g6");
    std::fs::write(&trees_path, ">>graph6<<Ds_\n\nA_\n").unwrap();
    let out = run(&["sigma", "--in", trees_path.to_str().unwrap()]);
    assert!(out.status.success());
    let lines: Vec<&str> = stdout_of(&out).lines().collect();
    assert_eq!(lines.len(), 2);
    let star: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(star["sigma"], 36);
}
