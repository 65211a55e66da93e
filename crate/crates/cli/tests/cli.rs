use std::process::{Command, Output};

use serde_json::Value;

fn linial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linial")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = linial(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn g2_constituent_raw_json() {
    let s = stdout(&["charquasi", "G2", "-m", "1", "--constituent", "1", "--json", "--raw"]);
    assert_eq!(s.trim(), r#"{"coeffs":[["11","1"],["-6","1"],["1","1"]]}"#);
}

#[test]
fn envelope_carries_command_inputs_and_result() {
    let v = json(&["charquasi", "G2", "-m", "1", "--constituent", "1", "--json"]);
    assert_eq!(v["command"], "charquasi");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["inputs"]["system"], "G2");
    assert_eq!(v["inputs"]["m"], 1);
    assert_eq!(v["result"]["coeffs"][0][0], "11");
}

#[test]
fn json_output_round_trips() {
    let cases: &[&[&str]] = &[
        &["table", "--json"],
        &["eulerian", "E6", "--json"],
        &["ehrhart", "F4", "--series", "12", "--json"],
        &["charquasi", "E7", "-m", "2", "--json"],
        &["admissible", "E8", "--json"],
        &["toy", "G2", "-m", "3", "--json"],
        &["check-line", "F4", "-m", "5", "--json"],
        &["check-line", "G2", "-m", "4", "--numeric", "--json"],
        &["limit-roots", "E6", "--json"],
        &["oracle", "modq", "B2", "-m", "1", "-q", "9", "--json"],
        &["track", "G2", "-d", "1", "--m-list", "5,10", "--json"],
    ];
    for args in cases {
        let s = stdout(args);
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", s, "{args:?}");
    }
}

#[test]
fn admissible_e7_human() {
    let s = stdout(&["admissible", "E7"]);
    assert!(s.contains("divisors 1,3; m0=2"), "{s}");
}

#[test]
fn limit_roots_e8_max_real_part() {
    let v = json(&["limit-roots", "E8", "--json"]);
    let x = v["result"]["max_real_part"].as_f64().unwrap();
    assert!((x - 14.6604).abs() < 1e-3, "{x}");
}

#[test]
fn g2_quasi_polynomial_collapses_in_human_output() {
    let s = stdout(&["charquasi", "G2", "-m", "1"]);
    assert_eq!(s, "q = 0,2,4 mod 6: t^2 - 6t + 14\nq = 1,3,5 mod 6: t^2 - 6t + 11\n");
}

#[test]
fn eulerian_human_uses_x() {
    assert_eq!(stdout(&["eulerian", "A2"]), "x^2 + x\n");
}

#[test]
fn usage_error_exits_with_two() {
    assert_eq!(linial(&["charquasi", "X3", "-m", "1"]).status.code(), Some(2));
    assert_eq!(linial(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(linial(&["check-line", "G2", "-m", "1", "--exact", "--numeric"]).status.code(), Some(2));
}

#[test]
fn computational_error_is_structured() {
    let out = linial(&["oracle", "modq", "G2", "-m", "1", "-q", "3", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["name"], "QTooSmall");
    assert!(v.get("result").is_none());
    let out = linial(&["track", "E6", "-d", "99", "--m-list", "1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_writes_file() {
    let path = std::env::temp_dir().join(format!("linial-cli-test-{}.json", std::process::id()));
    let out = linial(&["eulerian", "G2", "--json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "eulerian");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn verify_all_is_deterministic_and_passes() {
    let a = linial(&["verify-all", "--json"]);
    let b = linial(&["verify-all", "--json"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["result"].as_array().unwrap().len(), 12);
}

#[test]
fn verify_all_selection() {
    let s = stdout(&["verify-all", "--only", "2,8"]);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.starts_with("[PASS]")), "{s}");
}
