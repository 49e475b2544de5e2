use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcert")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn analyze_json_q2() {
    let o = run(&["analyze", "--q", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gamma"]["coeffs"].to_string(), "[4,0,1]");
    assert_eq!(v["delta"]["coeffs"].to_string(), "[-4]");
    assert_eq!(v["knot"], "J(2,4)");
    assert_eq!(v["verdicts"]["consistent"], true);
    assert_eq!(v["fox_check"]["ran"], false);
    assert_eq!(v["numeric"]["roots"].as_array().unwrap().len(), 3);
}

#[test]
fn zero_q_is_usage_error() {
    assert_eq!(run(&["analyze", "--q", "0"]).status.code(), Some(2));
}

#[test]
fn unparseable_q_is_usage_error() {
    assert_eq!(run(&["analyze", "--q", "two"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
}

#[test]
fn fox_check_negative_q() {
    let o = run(&["analyze", "--q", "-1", "--fox-check", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fox_check"]["ran"], true);
    assert_eq!(v["fox_check"]["agrees"], true);
    assert_eq!(v["delta"]["coeffs"].to_string(), "[-4]");
}

#[test]
fn no_numeric_gives_null() {
    let o = run(&["analyze", "--q", "3", "--no-numeric", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["numeric"].is_null());
}

#[test]
fn sweep_skips_zero() {
    let o = run(&["sweep", "--q-min", "-5", "--q-max", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let qs: Vec<i64> = json_lines(&o).iter().map(|v| v["q"].as_i64().unwrap()).collect();
    assert_eq!(qs, vec![-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("summary: 10/10 consistent"));
}

#[test]
fn sweep_single_trefoil() {
    let o = run(&["sweep", "--q-min", "1", "--q-max", "1", "--format", "json"]);
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["verdicts"]["fibered_expected"], true);
    assert_eq!(recs[0]["verdicts"]["monic_at_some_rep"], true);
}

#[test]
fn empty_range_is_usage_error() {
    assert_eq!(run(&["sweep", "--q-min", "3", "--q-max", "2"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic() {
    let args = ["sweep", "--q-min", "-4", "--q-max", "4", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn table_and_json_agree() {
    let table = stdout(&run(&["sweep", "--q-min", "-3", "--q-max", "3"]));
    let recs = json_lines(&run(&["sweep", "--q-min", "-3", "--q-max", "3", "--format", "json"]));
    let rows: Vec<&str> = table.lines().skip(1).filter(|l| !l.starts_with("summary")).collect();
    assert_eq!(rows.len(), recs.len());
    for (row, rec) in rows.iter().zip(&recs) {
        let fields: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(fields[0], rec["q"].to_string());
        assert_eq!(fields[1], rec["knot"].as_str().unwrap());
        assert_eq!(fields[2], rec["riley"]["degree"].to_string());
    }
    assert!(table.trim_end().ends_with("summary: 6/6 consistent"));
}

#[test]
fn csv_output() {
    let o = run(&["sweep", "--q-min", "-2", "--q-max", "2", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("q,knot,riley,riley_degree"));
    assert!(lines[4].starts_with("2,\"J(2,4)\",\"[1,-2,1,-1]\",3,-1,\"[4,0,1]\""));
}
