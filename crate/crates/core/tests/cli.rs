use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankelcf"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn hankel_of_catalan() {
    let out = run(&["hankel", "data/catalan.json", "--n", "4", "--k", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["det"], "1");
}

#[test]
fn period_of_the_seven_term_pattern() {
    let out = run(&["period", "data/prop11.json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["period"]["composite"]["shift"], 7);
    assert_eq!(v["period"]["composite"]["sign"], -1);
}

#[test]
fn verify_reports_the_stated_form_of_an_erratum() {
    let out = run(&["verify", "--catalog-id", "G2.H1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"][0]["stated"]["pass"], false);
}

#[test]
fn csv_is_deterministic() {
    let args = ["--format", "csv", "verify", "--catalog-id", "catalan.Hk", "--grid", "i=2..3,n=4"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("id,family,n,point,seed,pass,expected,oracle\n"));
    assert!(text.contains("catalan.Hk,i=3,4,,1592594996,true,55,55\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["paths", "data/motzkin_steps.json", "--n-max", "6", "--against", "data/catalan.json"]).status.code(), Some(1));
    assert_eq!(run(&["paths", "data/motzkin_steps.json", "--n-max", "30", "--against", "data/f2.json"]).status.code(), Some(0));
    let out = run(&["solve", "data/invalid_v0.json"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["message"].as_str().unwrap().contains("v(0)=0"));
    assert_eq!(run(&["verify", "--catalog-id", "no.such.id"]).status.code(), Some(2));
    assert_eq!(run(&["hankel"]).status.code(), Some(2));
}
