use std::process::{Command, Output};

use serde_json::Value;

fn kronecker(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronecker"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn kronecker_threads(threads: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronecker"))
        .env("KRONECKER_THREADS", threads)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&kronecker(&all))).unwrap()
}

#[test]
fn kron_single_coefficient() {
    let v = json(&["kron", "15", "3", "6,4,4,1", "--nu", "5,4,3,3"]);
    assert_eq!(v["value"], "4");
    assert_eq!(v["method"], "tableau_rule");
    assert_eq!(v["lambda"], serde_json::json!([6, 4, 4, 1]));
    for method in ["oracle-signed", "oracle-char"] {
        let v = json(&["kron", "15", "3", "6,4,4,1", "--nu", "5,4,3,3", "--method", method]);
        assert_eq!(v["value"], "4", "{method}");
    }
}

#[test]
fn kron_expansion_schema() {
    let v = json(&["kron", "7", "3", "4,3", "--method", "oracle-signed"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "n", "p", "lambda", "terms", "method"]);
    let terms = v["terms"].as_array().unwrap();
    assert!(terms.contains(&serde_json::json!({"nu": [4, 2, 1], "coeff": "1"})));
    let nus: Vec<Vec<u64>> = terms
        .iter()
        .map(|t| {
            t["nu"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect();
    let mut sorted = nus.clone();
    sorted.sort_by(|a, b| b.cmp(a));
    assert_eq!(nus, sorted);

    let v = json(&["kron", "6", "0", "3,2,1"]);
    assert_eq!(v["terms"], serde_json::json!([{"nu": [3, 2, 1], "coeff": "1"}]));
}

#[test]
fn skew_and_lr() {
    assert_eq!(
        stdout(&kronecker(&["skew", "4,4,2,2", "3,3"])),
        "(3,3) : 1\n(3,2,1) : 1\n(2,2,1,1) : 1\n"
    );
    assert_eq!(stdout(&kronecker(&["skew", "3,2,1", ""])), "(3,2,1) : 1\n");
    assert_eq!(stdout(&kronecker(&["skew", "3,3,3", "1,1"])), "(3,2,2) : 1\n");
    assert_eq!(json(&["lr", "5,4,3", "4,3,2", "2,1"])["value"], "2");
}

#[test]
fn positivity_reports_witness() {
    assert_eq!(json(&["positivity", "6,4,2,2", "3,1"])["schur_positive"], true);
    assert_eq!(json(&["positivity", "5,1", "3"])["schur_positive"], true);
    let v = json(&["positivity", "4,4", "3,1"]);
    assert_eq!(v["schur_positive"], false);
    assert!(v["witness"]["coeff"].as_str().unwrap().starts_with('-'));
}

#[test]
fn mfree_verdicts() {
    let v = json(&["mfree", "6", "2", "3,3"]);
    assert_eq!(v["verdicts"][0]["multiplicity_free"], true);
    assert_eq!(v["verdicts"][0]["source"], "p2_classification");
    assert_eq!(
        json(&["mfree", "7", "2", "4,2,1"])["verdicts"][0]["multiplicity_free"],
        false
    );
    let v = json(&["mfree", "--sweep", "8", "2"]);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 22);
}

#[test]
fn formulas_and_rerouting() {
    assert_eq!(
        json(&["formula", "hook", "10", "2", "3", "--nu", "7,1,1,1"])["value"],
        "2"
    );
    let v = json(&["formula", "hook", "10", "3", "6", "--nu", "4,3,3"]);
    assert!(v["note"].is_string());
    assert_ne!(v["method"], "formula");
    let v = json(&["formula", "seq", "13", "2", "4"]);
    let values: Vec<&str> = v["sequence"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "1", "2", "1", "1"]);
    assert_eq!(v["unimodal"], true);
    assert_eq!(json(&["formula", "tworow", "12", "2", "9,3", "--t", "3"])["value"], "2");
    assert_eq!(json(&["formula", "nu334", "10", "3", "4", "4,2,2,2"])["value"], "0");
    assert_eq!(
        json(&["formula", "rect-p2", "3", "2"])["terms"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
    assert_eq!(json(&["formula", "p1", "2,1"])["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_suites_pass() {
    for suite in ["theorem", "oracles", "formulas"] {
        let out = stdout(&kronecker(&["verify", "--grid", "9", "3", "--suite", suite]));
        assert!(out.starts_with("all equal"), "{suite}: {out}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(kronecker(&["kron", "7", "3", "4,5"]).status.code(), Some(2));
    assert_eq!(kronecker(&["kron", "7", "3", "4,4"]).status.code(), Some(3));
    assert_eq!(kronecker(&["kron", "5", "3", "3,2"]).status.code(), Some(3));
    assert_eq!(kronecker(&["skew", "2,1", "3"]).status.code(), Some(3));
    assert_eq!(
        kronecker(&["kron", "7", "3", "4,3", "--method", "fast"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kronecker(&["kron", "7", "3", "4,3", "--method", "theorem"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(kronecker_threads("many", &["skew", "2", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["--json", "mfree", "--sweep", "12", "3"];
    let one = stdout(&kronecker_threads("1", &args));
    let four = stdout(&kronecker_threads("4", &args));
    assert_eq!(one, four);
    let args = ["verify", "--grid", "10", "3", "--suite", "formulas", "--json"];
    assert_eq!(
        stdout(&kronecker_threads("1", &args)),
        stdout(&kronecker_threads("3", &args))
    );
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["--json", "kron", "15", "3", "6,4,4,1"],
        vec!["--json", "positivity", "4,4", "3,1"],
        vec!["--json", "formula", "seq", "20", "3", "5"],
        vec!["--json", "mfree", "--sweep", "7", "2"],
    ] {
        let out = stdout(&kronecker(&args));
        let parsed: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), out.trim_end());
    }
}
