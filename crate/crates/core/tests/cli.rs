//! The command line, driven through the library entry point and the built binary.

use std::process::Command;

use separable_mv::cli::run;
use serde_json::{json, Value};

fn call(args: &[&str]) -> (i32, Value) {
    let out = run(std::iter::once("mvsep").chain(args.iter().copied()));
    (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
}

#[test]
fn separable_reports_chain_factors() {
    let (code, v) = call(&["separable", "--alg", r#"{"finite":[2,3]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["separable"], json!(true));
    assert_eq!(v["factors"], json!([{"kind": "chain", "n": 2}, {"kind": "chain", "n": 3}]));
    assert_eq!(v["witness_agrees"], json!(true));
}

#[test]
fn subterminal_examples() {
    assert_eq!(call(&["subterminal", "--alg", r#"{"finite":[6]}"#]).1["subterminal"], json!(true));
    assert_eq!(call(&["subterminal", "--alg", r#"{"finite":[1,1]}"#]).1["subterminal"], json!(false));
    let dyadic = r#"{"rational":{"kind":"supernatural","primes":{"2":"inf"},"all":false}}"#;
    assert_eq!(call(&["subterminal", "--alg", dyadic]).1["subterminal"], json!(true));
}

#[test]
fn pi0_of_sierpinski_has_one_class() {
    let (code, v) = call(&["pi0", "--space", r#"{"points":2,"opens":[[],[0],[0,1]]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["classes"], json!([[0, 1]]));
    assert_eq!(v["quotient"]["points"], json!(1));
}

#[test]
fn other_verbs() {
    let (_, v) = call(&["eval", "--alg", r#"{"finite":[2,3]}"#, "--term", "!x + y", "--env", r#"{"x":["1","1/3"],"y":"0"}"#]);
    assert_eq!(v["value"], json!(["0", "2/3"]));
    let (_, v) = call(&["decompose", "--alg", r#"{"finite":[3,2,3]}"#]);
    assert_eq!(v["factors"], json!([{"finite": [2]}, {"finite": [3]}, {"finite": [3]}]));
    let (_, v) = call(&["pierce", "--alg", r#"{"simplicial":{"rank":2,"unit":[2,3]}}"#]);
    assert_eq!(v["atom_count"], json!(2));
    let (_, v) = call(&["coproduct", "--alg", r#"{"finite":[2]}"#, "--alg", r#"{"finite":[3]}"#]);
    assert_eq!(v["algebra"], json!({"finite": [6]}));
    let (_, v) = call(&["rank", "--alg", r#"{"rational":{"kind":"supernatural","primes":{},"all":true}}"#, "--elem", r#"["2/5"]"#]);
    assert_eq!(v["rank"], json!(1));
    assert_eq!(v["structure"], json!({"finite": [5]}));
    let (_, v) = call(&["spec", "--alg", r#"{"finite":[2,3]}"#, "--elem", r#"["1/2","0"]"#]);
    assert_eq!(v["support"], json!([0]));
    let s = r#"{"points":2,"opens":[[],[0],[0,1]]}"#;
    let (_, v) = call(&["gamma", "--space", s, "--space", s]);
    assert_eq!(v["homeomorphism"], json!(true));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["separable", "--alg", r#"{"finite":[0]}"#]).0, 2);
    assert_eq!(call(&["eval", "--alg", r#"{"finite":[2]}"#, "--term", "x +", "--env", r#"{"x":"1/2"}"#]).0, 2);
    assert_eq!(call(&["pi0", "--space", r#"{"points":2,"opens":[[0]]}"#]).0, 2);
    assert_eq!(call(&["verify"]).0, 2);
    assert_eq!(call(&["verify", "--criterion", "5", "--criterion", "10"]).0, 0);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--criterion", "8", "--seed", "7", "--max-size", "10"];
    let a = run(std::iter::once("mvsep").chain(args));
    let b = run(std::iter::once("mvsep").chain(args));
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_mvsep"))
        .args(["separable", "--alg", r#"{"finite":[2,3]}"#])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["separable"], json!(true));
    let bad = Command::new(env!("CARGO_BIN_EXE_mvsep")).args(["pierce", "--alg", "[]"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
