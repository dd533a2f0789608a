use std::process::{Command, Output};

use serde_json::Value;

fn isoblock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoblock")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = isoblock(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn core_of_three_one() {
    let v = json(&["core", "--partition", "3,1", "--e", "2"]);
    assert_eq!(v["core"], serde_json::json!([]));
    assert_eq!(v["quotient"]["components"], serde_json::json!([[2], []]));
    assert_eq!(v["weight"], 2);
}

#[test]
fn symbol_invariants() {
    let v = json(&["symbol", "--t", "1", "--mu1", "2", "--mu2", "1", "--d", "2"]);
    assert_eq!(v["defect"], 3);
    assert_eq!(v["rank"], 5);
    assert_eq!(v["hooks"], 1);
    assert_eq!(v["display"], "[3:2 | 0:1]");
}

#[test]
fn fock_word_adds_boxes() {
    let v = json(&["fock", "--charges", "0,1", "--partitions", "1;", "--e", "3", "--word", "f1"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let v = json(&["fock", "--charges", "0,1", "--partitions", "1;", "--e", "3", "--word", "f0"]);
    assert!(v["terms"].as_array().unwrap().is_empty());
}

#[test]
fn brauer_tree_is_a_path() {
    let v = json(&[
        "tree", "--q", "3", "--ell", "13", "--theta-plus", "[1:3 | 0:∅]", "--theta-minus", "[1:∅ | 0:∅]",
    ]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    let out = isoblock(&[
        "--format", "ascii", "tree", "--q", "3", "--ell", "13", "--theta-plus", "[1:3 | 0:∅]", "--theta-minus",
        "[1:∅ | 0:∅]",
    ]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("(exc)"));
}

#[test]
fn blocks_of_small_rank() {
    let v = json(&["blocks", "--q", "3", "--ell", "13", "--n", "3"]);
    let total: u64 = v.as_array().unwrap().iter().map(|b| b["characters"].as_u64().unwrap()).sum();
    // odd symbols by rank: 1, 2, 6, 12
    assert_eq!(total, 12 + 2 * 6 + 6 * 2 + 12);
}

#[test]
fn verify_exits_zero_on_success() {
    let v = json(&["verify", "hecke-eigenvalues", "--t", "1", "--q0", "3"]);
    assert_eq!(v["passed"], true);
    let v = json(&["verify", "coset-oracle", "--max-m", "4"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn errors_exit_two() {
    assert_eq!(isoblock(&["core", "--partition", "3,x", "--e", "2"]).status.code(), Some(2));
    assert_eq!(isoblock(&["frobnicate"]).status.code(), Some(2));
    let non_cyclic = isoblock(&[
        "tree", "--q", "3", "--ell", "13", "--theta-plus", "[1:1 | 0:∅]", "--theta-minus", "[1:∅ | 0:∅]",
    ]);
    assert_eq!(non_cyclic.status.code(), Some(2));
    let unitary_rock = isoblock(&[
        "rock", "--q", "3", "--ell", "5", "--theta-plus", "[1:3 | 0:∅]", "--theta-minus", "[1:∅ | 0:∅]",
    ]);
    assert_eq!(unitary_rock.status.code(), Some(2));
}
