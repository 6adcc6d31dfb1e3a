use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn irk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irk")).args(args).output().expect("irk runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("irk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn m_of_s4() {
    let out = irk(&["--json", "irr", "m", "builtin:S4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"], 3);
    assert_eq!(v["exact"], true);
}

#[test]
fn f_base_value() {
    let out = irk(&["--json", "bounds", "f", "2", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], "4");
}

#[test]
fn bad_set_is_unclassifiable() {
    let path = temp_file("bad.json", r#"["(1 2)(3 4)", "(1 3)(2 4)", "(1 2 3)"]"#);
    let out = irk(&["--json", "classify", "an", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "unclassifiable");
}

#[test]
fn type_set_classifies() {
    let made = irk(&["--json", "--seed", "3", "classify", "make", "--type", "5", "--n", "9"]);
    assert_eq!(made.status.code(), Some(0));
    let set = json(&made)["set"].clone();
    let path = temp_file("type5.json", &serde_json::json!({ "set": set }).to_string());
    let out = irk(&["--json", "classify", "sn", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["equal_up_to_inversion"], true);
}

#[test]
fn exhausted_budget_exits_3() {
    let out = irk(&["--json", "irr", "m", "builtin:A6", "--budget-nodes", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["exact"], false);
}

#[test]
fn missing_file_is_usage_error() {
    let out = irk(&["--json", "irr", "m", "/nonexistent/group.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "invalid_input");
}

#[test]
fn unknown_subcommand_is_usage_error() {
    assert_eq!(irk(&["bogus"]).status.code(), Some(2));
}

#[test]
fn malformed_permutation_is_usage_error() {
    let out = irk(&["--json", "decomp", "strong", "(1 2", "--x", "1", "--y", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn intractable_psi_exits_3_with_lower_bound() {
    let out = irk(&["--json", "bounds", "Psi", "3"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert!(v["value"].is_null());
    assert!(v["lower_bound"].is_string());
}

#[test]
fn decompositions_verify() {
    let out = irk(&["--json", "decomp", "m", "(1 4 2 5)(3 6)", "--partition", "0:6|1:1,2,3|2:4,5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verified"], true);
    let out = irk(&["--json", "decomp", "strong", "(1 3 2 4)", "--x", "1,2", "--y", "3,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verified"], true);
}

#[test]
fn wreath_witness_for_a5_s3() {
    let out = irk(&["--json", "wreath", "witness-m", "--base", "A5", "--top", "S3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["size"], 5);
    assert_eq!(v["irredundant"], true);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["--json", "--seed", "11", "classify", "sample", "--group", "A7", "--count", "3"];
    let (a, b) = (irk(&args), irk(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("irk-cli-out-{}.json", std::process::id()));
    let out = irk(&["--output", path.to_str().unwrap(), "bounds", "psi", "2", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["value"], "111521317");
    std::fs::remove_file(path).ok();
}

#[test]
fn single_criterion_runs() {
    let out = irk(&["--json", "acceptance", "--only", "A7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], 1);
    assert_eq!(v["failed"], 0);
}
