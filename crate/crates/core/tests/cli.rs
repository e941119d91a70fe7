use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_continuants")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

#[test]
fn eval() {
    assert_eq!(stdout(&["eval", "2", "4", "5", "1", "1"]), "103\n");
    assert_eq!(stdout(&["eval", "--cf", "--leading", "0", "1", "2", "3"]), "10\n7/10\n");
    assert_eq!(run(&["eval", "2", "0"]).status.code(), Some(2));
}

#[test]
fn extremal_commands() {
    let v = json(&["max-v", "--elements", "1,2,3"]);
    assert_eq!(v["value"], "10");
    assert_eq!(v["witness"], serde_json::json!([1, 2, 3]));
    assert_eq!(json(&["max-w", "--values", "1,2,3", "--mults", "1,1,1"])["value"], "11");
    assert_eq!(json(&["min-w", "--elements", "3,1,2"])["value"], "9");
    assert_eq!(json(&["max-un", "--sum", "5"])["value"], "8");
    let t = json(&["min-ustn", "--sum", "7", "--len", "3", "--bound", "3"]);
    assert_eq!(t["value"], "13");
    assert_eq!(t["params"]["kind"], "template");
    let u = json(&["min-un", "--sum", "8", "--bound", "2"]);
    assert_eq!(u["value"], "24");
    assert_eq!(json(&["max-ust", "--sum", "7", "--len", "3"])["family"], "max-ust");
}

#[test]
fn plain_output() {
    let out = stdout(&["--plain", "min-ustn", "--sum", "7", "--len", "3", "--bound", "3"]);
    assert!(out.contains("witness  (3,3,1)"));
    assert!(out.contains("value    13"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["min-ustn", "--sum", "30", "--len", "3", "--bound", "3"]).status.code(), Some(3));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["max-v"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["trace", "--seq", "2,1,3", "--maximize"]).status.code(), Some(2));
}

#[test]
fn verify() {
    let v = json(&["verify", "--family", "thm6", "--S-max", "8", "--n-max", "3"]);
    assert_eq!(v["all_match"], true);
    assert!(v["points"].as_array().unwrap().iter().all(|p| p["match"] == true));
    let bad = run(&["verify", "--family", "thm5", "--S-max", "6", "--corrupt-formula"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("counterexample"));
}

#[test]
fn bound_and_trace() {
    let b = json(&["bound", "--sum", "8", "--bound", "2"]);
    assert_eq!(b["exact_min"], "24");
    assert!(b["bound"].as_str().unwrap().starts_with("2.92"));
    assert!(stdout(&["bound", "--remark1"]).starts_with("1.422689"));
    let t = json(&["trace", "--seq", "1,2,3", "--minimize"]);
    let last = t["final"].as_array().unwrap();
    assert_eq!(last.len(), 3);
    assert_eq!(t["value"], "9");
    for step in t["steps"].as_array().unwrap() {
        let (b, a): (u64, u64) = (step["before"].as_str().unwrap().parse().unwrap(), step["after"].as_str().unwrap().parse().unwrap());
        assert!(a <= b);
    }
}
