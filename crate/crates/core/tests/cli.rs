use std::process::{Command, Output};

use codeaut::cli::{cmd_survey_prime, CodeRecord, Cyclicity, SurveyConfig};
use serde_json::Value;

fn codeaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codeaut"))
        .args(args)
        .env_remove("CODEAUT_CAP")
        .env_remove("CODEAUT_OUT")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn construct_prints_code_json() {
    let v = stdout_json(&codeaut(&["construct", "k", "3,3"]));
    assert_eq!(v["n"], 9);
    assert_eq!(v["k"], 6);
    assert_eq!(v["basis"].as_array().unwrap().len(), 6);
}

#[test]
fn factor_and_enumerate() {
    let v = stdout_json(&codeaut(&["factor", "7"]));
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);
    let degrees: Vec<u64> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["degree"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees, vec![1, 3, 3]);
    let v = stdout_json(&codeaut(&["enumerate", "15"]));
    assert_eq!(v.as_array().unwrap().len(), 32);
}

#[test]
fn analyze_appends_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("records.jsonl");
    let out_str = out.to_str().unwrap();
    for family in [["c0", "3", "4"], ["c0", "3", "3"]] {
        let mut args = vec!["analyze"];
        args.extend(family);
        args.extend(["--out", out_str]);
        assert!(codeaut(&args).status.success());
    }
    let text = std::fs::read_to_string(&out).unwrap();
    let records: Vec<CodeRecord> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0].aut_order.as_deref(), Some("144"));
    assert_eq!(records[0].cyclic, Cyclicity::Yes);
    assert_eq!(records[1].aut_order.as_deref(), Some("72"));
    assert_eq!(records[1].cyclic, Cyclicity::No);
}

#[test]
fn analyze_reads_code_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hamming.json");
    let built = codeaut(&["construct", "hamming", "3"]);
    std::fs::write(&path, &built.stdout).unwrap();
    let v = stdout_json(&codeaut(&["analyze", "--json", path.to_str().unwrap()]));
    assert_eq!(v["d"], 3);
    assert_eq!(v["aut_order"], "168");
}

#[test]
fn environment_and_config_overrides() {
    let out = Command::new(env!("CARGO_BIN_EXE_codeaut"))
        .args(["analyze", "c0", "3", "4"])
        .env("CODEAUT_CAP", "4")
        .env_remove("CODEAUT_OUT")
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert!(v["d"].is_null());
    assert!(v["errors"]["d"]
        .as_str()
        .unwrap()
        .starts_with("enumeration-infeasible"));

    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("caps.toml");
    std::fs::write(&cfg, "enumeration_cap = 4\n").unwrap();
    let v = stdout_json(&codeaut(&[
        "analyze",
        "c0",
        "3",
        "4",
        "--config",
        cfg.to_str().unwrap(),
    ]));
    assert!(v["d"].is_null());
    let v = stdout_json(&codeaut(&[
        "analyze",
        "c0",
        "3",
        "4",
        "--config",
        cfg.to_str().unwrap(),
        "--cap",
        "64",
    ]));
    assert_eq!(v["d"], 3);
}

#[test]
fn bad_input_exits_with_error() {
    assert_eq!(codeaut(&["factor", "8"]).status.code(), Some(2));
    assert_eq!(codeaut(&["construct", "c0", "x"]).status.code(), Some(2));
    assert_eq!(
        codeaut(&["verify-paper", "--tier", "huge"]).status.code(),
        Some(2)
    );
    assert_eq!(
        codeaut(&["analyze", "c0", "3", "4", "--workers", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn survey_is_reproducible_across_worker_counts() {
    let one = SurveyConfig::default();
    let many = SurveyConfig {
        workers: 4,
        ..SurveyConfig::default()
    };
    let a: Vec<String> = cmd_survey_prime(17, &one)
        .unwrap()
        .iter()
        .map(CodeRecord::to_json_line_without_timing)
        .collect();
    let b: Vec<String> = cmd_survey_prime(17, &many)
        .unwrap()
        .iter()
        .map(CodeRecord::to_json_line_without_timing)
        .collect();
    assert_eq!(a, b);
    assert_eq!(a.len(), 8);
}

#[test]
fn survey_prime_writes_summary_table() {
    let out = codeaut(&["survey-prime", "7"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 8);
    let table = String::from_utf8(out.stderr).unwrap();
    assert!(table.starts_with("source"));
    assert!(table.contains("[7,4,3]"));
}
