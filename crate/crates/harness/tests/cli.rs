use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn lcgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcgroup"))
        .args(args)
        .env_remove("LCGROUP_ORDER_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn lc_series_of_a4() {
    let out = lcgroup(&["lc-series", "Alt(4)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["terms"], serde_json::json!([1, 4, 12]));
    assert_eq!(v["class"], 2);
}

#[test]
fn cp2_of_s3_reports_transpositions() {
    let out = lcgroup(&["--format", "json", "cp2", "Sym(3)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["holds"], false);
    let c = &v["counterexample"];
    assert_eq!(
        (
            c["order_x"].as_u64(),
            c["order_y"].as_u64(),
            c["order_xy"].as_u64()
        ),
        (Some(2), Some(2), Some(3))
    );
    assert_ne!(c["x"], c["y"]);
}

#[test]
fn info_and_lcm() {
    let v = json(&lcgroup(&["info", "Dic(2)", "--format", "json"]));
    assert_eq!(v["order"], 8);
    assert_eq!(v["center_order"], 2);
    assert_eq!(v["nilpotent"], true);
    let v = json(&lcgroup(&[
        "lcm",
        "Dih(8)",
        "--witnesses",
        "--format",
        "json",
    ]));
    assert_eq!(v["lcm_size"], 4);
    assert_eq!(v["lc_order"], 4);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 4);
}

#[test]
fn nlcm_on_d8_and_q8() {
    let v = json(&lcgroup(&["nlcm", "Dih(8)", "--format", "json"]));
    assert_eq!(v["is_nlcm"], true);
    assert_eq!(v["structure_holds"], true);
    let v = json(&lcgroup(&["nlcm", "Dic(2)", "--format", "json"]));
    assert_eq!(v["is_nlcm"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        lcgroup(&["--seedless", "info", "Cyc(3)"]).status.code(),
        Some(2)
    );
    assert_eq!(lcgroup(&["info", "prod(Dih(8),"]).status.code(), Some(2));
    assert_eq!(
        lcgroup(&["verify", "no-such-campaign"]).status.code(),
        Some(2)
    );
    assert_eq!(lcgroup(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        lcgroup(&["--cap", "10", "info", "Sym(4)"]).status.code(),
        Some(2)
    );
}

#[test]
fn spec_error_names_offset() {
    let out = lcgroup(&["info", "prod(Dih(8),"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 12"));
}

#[test]
fn order_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lcgroup"))
        .args(["info", "Sym(4)"])
        .env("LCGROUP_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generator_file_spec() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# square\n(1 2 3 4)\n(1 3)").unwrap();
    let spec = format!("file:{}", file.path().display());
    let v = json(&lcgroup(&["info", &spec, "--format", "json"]));
    assert_eq!(v["order"], 8);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "(1 2 2)").unwrap();
    let out = lcgroup(&["info", &format!("file:{}", bad.path().display())]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("repeated point"));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = lcgroup(&[
        "verify",
        "paper-examples",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["campaign"], "paper-examples");
    assert_eq!(v["engine"]["name"], "lcgroup");
    assert_eq!(v["summary"]["failed"], 0);
    for key in ["campaign", "engine", "caps", "groups", "summary"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_filter_and_cap_skip() {
    let out = lcgroup(&[
        "--cap",
        "30",
        "verify",
        "prop-equ",
        "--filter",
        "paper-example",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let verdicts: Vec<&str> = v["groups"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["verdict"].as_str().unwrap())
        .collect();
    assert!(verdicts.contains(&"skipped: cap"));
    assert!(verdicts.iter().all(|&s| s == "pass" || s == "skipped: cap"));
}

#[test]
fn corpus_list() {
    let out = lcgroup(&["corpus", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("prod(Dih(8),Dih(8))")));
}
