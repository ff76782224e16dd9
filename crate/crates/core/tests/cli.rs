//! End-to-end checks of the `klr` binary.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klr")).args(args).output().expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn lyndon_words_for_e6() {
    let v = json_ok(&["--type", "E", "--rank", "6", "--json", "lyndon"]);
    let words = v["words"].as_array().unwrap();
    assert_eq!(words.len(), 36);
    assert_eq!(words[0], "1");
}

#[test]
fn canonical_table_for_g2() {
    let v = json_ok(&["--type", "G", "--rank", "2", "--json", "canonical"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 18);
    assert_eq!(v["ordering"], "lyndon");
}

#[test]
fn counterexample_gram_rank_drops_mod_two() {
    let v = json_ok(&["--type", "A", "--rank", "5", "--mod", "2", "--json", "gram", "--willcex"]);
    assert_eq!(v["rank_char0"], 3);
    assert_eq!(v["rank_mod"]["2"], 2);
    assert!(v["printed_basis_matrix"].is_array());
}

#[test]
fn resolution_json_shape() {
    let v = json_ok(&["--type", "A", "--rank", "3", "--json", "resolve"]);
    assert_eq!(v["alpha"], serde_json::json!([1, 1, 1]));
    let terms = v["terms"].as_array().unwrap();
    let sizes: Vec<usize> = terms.iter().map(|t| t["summands"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, [1, 2, 1]);
    assert_eq!(v["differentials"].as_array().unwrap().len(), 2);
}

#[test]
fn non_multiplicity_free_root_is_unsupported() {
    let out = run(&["--type", "D", "--rank", "4", "resolve"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "unsupported");
}

#[test]
fn invalid_truncation_is_rejected() {
    let out = run(&["--type", "A", "--rank", "2", "--truncate", "0", "roots"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "precondition");
}

#[test]
fn invalid_order_is_rejected() {
    let out = run(&["--type", "A", "--rank", "2", "--order", "11", "roots"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["--type", "B", "--rank", "3", "--order", "321323121", "--json", "canonical"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn flags_override_config_file() {
    let dir = std::env::temp_dir().join(format!("klr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.json");
    std::fs::write(&path, r#"{"type": "A", "rank": 3, "truncate": 4}"#).unwrap();
    let p = path.to_str().unwrap();
    let from_file = json_ok(&["--config", p, "--json", "roots"]);
    assert_eq!(from_file["config"]["type"], "A3");
    assert_eq!(from_file["config"]["truncate"], 4);
    let overridden = json_ok(&["--config", p, "--truncate", "7", "--json", "roots"]);
    assert_eq!(overridden["config"]["truncate"], 7);
    std::fs::remove_dir_all(&dir).unwrap();
}
