//! Output and exit codes of the `uplus` binary.

use std::process::{Command, Output};

fn uplus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uplus")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn fuse_prints_decomposition() {
    let out = uplus(&["fuse", "a", "b"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"e":1,"ab":1}"#);
}

#[test]
fn fuse_check_dim() {
    let out = uplus(&["fuse", "ab", "ba", "--check-dim", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["holds"], true);
}

#[test]
fn malformed_word_is_usage_error() {
    assert_eq!(uplus(&["fuse", "ax", "b"]).status.code(), Some(2));
    assert_eq!(uplus(&["check-fingen", "--k", "0"]).status.code(), Some(2));
    assert_eq!(uplus(&["fuse", "a", "b", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn check_fingen_reports_witness() {
    let out = uplus(&["check-fingen", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["k"], 3);
    assert_eq!(r["component_dim"], 8);
    assert_eq!(r["span_rank"], 7);
    assert_eq!(r["generated"], false);
    assert_eq!(r["witness"], "aaaa");
}

#[test]
fn budget_exceeded_is_resource_error() {
    assert_eq!(uplus(&["check-fingen", "--k", "12"]).status.code(), Some(4));
    assert_eq!(uplus(&["check-fingen", "--k", "5", "--max-degree", "4"]).status.code(), Some(4));
}

#[test]
fn graph_dot_output() {
    let out = uplus(&["graph", "--k", "3", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph gamma_4 {"));
    assert_eq!(dot.matches(" -- ").count(), 12);
}

#[test]
fn orbit_under_gamma_and_dual() {
    let out = uplus(&["orbit", "--seed", "aab", "--gens", "gamma,dual", "--compact-up-to", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["orbit"]["size"], 4);
    assert_eq!(r["compactness"]["compact"], true);
}

#[test]
fn unknown_permutation_is_usage_error() {
    assert_eq!(uplus(&["orbit", "--seed", "a", "--gens", "shift"]).status.code(), Some(2));
}

#[test]
fn surjectivity_and_text_format() {
    let out = uplus(&["surjectivity", "--degree", "5", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "degree=5 surjective=true");
}
