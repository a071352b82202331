use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn qserre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qserre")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const BOUNDARY: &str = r#"{"q": "2/1", "factors": [{"d": 1, "a": "9/2"}]}"#;

#[test]
fn analyze_boundary_instance() {
    let v = json_of(&qserre(&["analyze", "--spec", BOUNDARY]));
    assert_eq!(v["aq_verdict"]["criterion_value"], "0/1");
    assert_eq!(v["aq_verdict"]["witness_dim"], 1);
    assert_eq!(v["aq_verdict"]["oracle"], false);
    assert_eq!(v["eep_ok"], true);
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn reports_are_byte_deterministic() {
    let spec = r#"{"factors": [{"d": 2, "a": "3/1"}, {"d": 1, "a": "5/2"}]}"#;
    let first = qserre(&["analyze", "--spec", spec]);
    let second = qserre(&["analyze", "--spec", spec]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn trivial_module_passes_everything() {
    let v = json_of(&qserre(&["analyze", "--spec", r#"{"factors": []}"#, "--q", "3/2"]));
    assert_eq!(v["dim"], 1);
    for key in ["chevalley_ok", "qserre_ok", "eep_ok", "projectors_ok", "equitable_ok", "shape_ok"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn spec_q_overrides_flag() {
    let v = json_of(&qserre(&["analyze", "--spec", BOUNDARY, "--q", "3/1"]));
    assert_eq!(v["spec"]["q"], "2/1");
    let v = json_of(&qserre(&["analyze", "--spec", r#"{"factors": [{"d": 1, "a": "1"}]}"#, "--q", "3/1"]));
    assert_eq!(v["spec"]["q"], "3/1");
}

#[test]
fn reducible_uq_spec_is_skipped_with_reason() {
    let out = qserre(&["analyze", "--spec", r#"{"factors": [{"d": 1, "a": "1"}, {"d": 1, "a": "4"}]}"#]);
    let v = json_of(&out);
    assert_eq!(v["uq_irreducible"], false);
    assert!(v["aq_skipped"].as_str().unwrap().contains("irreducibility condition fails"));
    assert!(v["aq_verdict"].is_null());
}

#[test]
fn spec_from_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(BOUNDARY.as_bytes()).unwrap();
    let arg = format!("@{}", file.path().display());
    let v = json_of(&qserre(&["analyze", "--spec", &arg]));
    assert_eq!(v["dim"], 2);
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["analyze", "--spec", "{not json"],
        vec!["analyze", "--spec", r#"{"factors": [{"d": 1, "a": "0"}]}"#],
        vec!["analyze", "--spec", "@/nonexistent/spec.json"],
        vec!["analyze", "--spec", r#"{"factors": []}"#, "--q", "1"],
        vec!["words", "--max-len", "17"],
        vec!["scan", "--d", "1", "--a-from", "1", "--a-to", "2", "--a-step", "0"],
    ] {
        let out = qserre(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn scan_rows_in_grid_order() {
    let v = json_of(&qserre(&["scan", "--d", "1", "--a-from", "1", "--a-to", "9", "--jobs", "3"]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row["a"], format!("{}/1", i + 1));
        assert_eq!(row["oracle"], true);
        assert_eq!(row["criterion"], true);
    }
    let v = json_of(&qserre(&["scan", "--d", "1", "--a-from", "9/2", "--a-to", "9/2"]));
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["oracle"], false);
    assert_eq!(v[0]["witness_dim"], 1);
}

#[test]
fn empty_scan() {
    let v = json_of(&qserre(&["scan", "--d", "1", "--a-from", "5", "--a-to", "1"]));
    assert_eq!(v, serde_json::json!([]));
}

#[test]
fn scan_errors_stay_in_row() {
    let v = json_of(&qserre(&["scan", "--d", "1", "--a-from", "-1", "--a-to", "1"]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows[1]["error"].is_string());
    assert_eq!(rows[2]["oracle"], true);
}

#[test]
fn word_table_rows() {
    let v = json_of(&qserre(&["words", "--max-len", "5"]));
    let row = |n: usize| {
        (v[n]["n"].as_u64().unwrap(), v[n]["irreducible"].as_u64().unwrap(), v[n]["total"].as_u64().unwrap())
    };
    assert_eq!(row(0), (0, 1, 1));
    assert_eq!(row(4), (4, 14, 16));
    assert_eq!(row(5), (5, 24, 32));
    assert!(v.as_array().unwrap().iter().all(|r| r["equivalence_ok"] == true));
}

#[test]
fn relations_report() {
    let v = json_of(&qserre(&["relations", "--spec", r#"{"factors": [{"d": 2, "a": "3"}]}"#]));
    assert_eq!(v["all_hold"], true);
    assert_eq!(v["chevalley"]["serre(e0p,e1p)=0"]["holds"], true);
    assert_eq!(v["qserre"]["serre(A,A*)=0"]["holds"], true);
    let v = json_of(&qserre(&["relations", "--spec", r#"{"factors": [{"d": 1, "a": "1"}, {"d": 1, "a": "4"}]}"#]));
    assert!(v["qserre"].is_null());
    assert_eq!(v["all_hold"], true);
}

#[test]
fn pretty_summary() {
    let out = qserre(&["--pretty", "analyze", "--spec", BOUNDARY]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("witness     dim 1"));
    assert!(text.contains("reducible"));
}
