use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const TWO_ARCH_WORD: &str = "1221311331221";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_absent")).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_absent"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn lines(out: &Output) -> Vec<String> {
    stdout(out).lines().map(str::to_string).collect()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&out)))
}

#[test]
fn analyze_reports_arches_and_representatives() {
    let v = json(&["analyze", "012121012"]);
    assert_eq!(v["iota"], 2);
    assert_eq!(v["arches"], serde_json::json!([3, 7]));
    assert_eq!(v["rest"], "12");
    assert_eq!(v["result"]["one_sas"], "200");
    assert_eq!(v["result"]["lex_min_sas"], "000");

    let v = json(&["analyze", TWO_ARCH_WORD]);
    assert_eq!(v["iota"], 2);
    assert_eq!(v["result"]["one_sas"], "323");
    assert_eq!(json(&["analyze", "0011"])["iota"], 1);
}

#[test]
fn json_records_have_the_stable_keys() {
    let v = json(&["check", "sas", "10", "0011"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = vec!["word_length", "sigma", "iota", "arches", "rest", "result", "items", "count"];
    expected.sort();
    let mut keys = keys;
    keys.sort();
    assert_eq!(keys, expected);
    assert_eq!(v["word_length"], 4);
    assert_eq!(v["sigma"], 2);
}

#[test]
fn check_answers_and_exit_codes() {
    let out = run(&["check", "mas", "10", "0011"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out), ["true"]);
    assert_eq!(run(&["check", "sas", "10", "0011"]).status.code(), Some(0));
    assert_eq!(run(&["check", "subseq", "01", "0011"]).status.code(), Some(0));

    let out = run(&["check", "mas", "110", "0011"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(lines(&out), ["false"]);
    assert_eq!(run(&["check", "sas", "000", "0011"]).status.code(), Some(1));

    // a foreign symbol can never occur, but is not a valid SAS query
    assert_eq!(run(&["check", "subseq", "2", "0011"]).status.code(), Some(1));
    let out = run(&["check", "sas", "2", "0011"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("foreign symbol"));
}

#[test]
fn enumerations() {
    assert_eq!(lines(&run(&["enum", "sas", "012121012"])), ["000", "100", "200"]);
    assert_eq!(lines(&run(&["enum", "mas", "0011"])), ["000", "10", "111"]);
    assert_eq!(lines(&run(&["enum", "sas", "--count-only", "1212"])), ["4"]);
    assert_eq!(lines(&run(&["enum", "mas", "--limit", "2", "0011"])), ["000", "10"]);

    let v = json(&["enum", "mas", "0011"]);
    assert_eq!(v["count"], "3");
    assert_eq!(v["items"], serde_json::json!(["000", "10", "111"]));
}

#[test]
fn counts_are_exact_beyond_machine_words() {
    // 200 arches of a 3-letter alternating word
    let word: String = (0..200).map(|k| if k % 2 == 0 { "abc" } else { "cba" }).collect();
    let out = run(&["enum", "sas", "--count-only", &word]);
    let count = stdout(&out).trim().to_string();
    assert!(count.len() > 20, "{count}");
    assert!(count.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn large_enumerations_warn_first() {
    let word = "ab".repeat(20);
    let out = run(&["enum", "sas", &word]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning: enumerating 22 words"));
    assert_eq!(lines(&out).len(), 22);
    let out = run(&["enum", "sas", "--limit", "3", &word]);
    assert!(out.stderr.is_empty());
}

#[test]
fn mas_dag_cap_is_enforced() {
    let out = run(&["enum", "mas", "--dag-cap", "3", "0011"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--dag-cap"));
}

#[test]
fn range_queries() {
    let v = json(&["range", "5", "13", TWO_ARCH_WORD]);
    assert_eq!(v["result"]["sas"], "23");
    assert_eq!(v["result"]["iota"], 1);
    let v = json(&["range", "2", "13", TWO_ARCH_WORD]);
    assert_eq!(v["result"]["sas"], "323");
    assert_eq!(v["result"]["iota"], 2);
    let v = json(&["range", "1", "1", TWO_ARCH_WORD]);
    assert_eq!(v["result"]["sas"].as_str().unwrap().chars().count(), 1);
    assert_eq!(run(&["range", "3", "2", TWO_ARCH_WORD]).status.code(), Some(2));
    assert_eq!(run(&["range", "1", "14", TWO_ARCH_WORD]).status.code(), Some(2));
}

#[test]
fn extensions() {
    assert_eq!(lines(&run(&["extend", "1", "0011"])), ["10"]);
    assert_eq!(lines(&run(&["extend", "", "0011"])), ["10"]);
    let out = run(&["extend", "01", "0011"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("cannot be extended"));

    let v = json(&["extend", "01", "0011"]);
    assert_eq!(v["result"]["extendable"], false);
    assert_eq!(v["result"]["mas"], Value::Null);
    let v = json(&["extend", "1", "0011"]);
    assert_eq!(v["result"]["extension"], "0");
}

#[test]
fn verification() {
    let out = run(&["verify", "0011"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(lines(&out).last().unwrap(), "OK");

    // A_2 over two letters: every MAS is an SAS
    let v = json(&["verify", "--check", "family,mas", "1221"]);
    assert_eq!(v["result"]["ok"], true);
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 2);

    let out = run(&["verify", "--budget", "100", &"0123".repeat(5)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn input_sources_and_modes() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0011").unwrap();
    let path = file.path().to_str().unwrap();
    assert_eq!(lines(&run(&["enum", "mas", "--file", path])), ["000", "10", "111"]);

    let out = run_with_stdin(&["check", "mas", "10"], "0011\n");
    assert_eq!(lines(&out), ["true"]);

    let v = json(&["analyze", "--ints", "7 3 7 10 3 10"]);
    assert_eq!(v["sigma"], 3);
    assert_eq!(v["iota"], 1);
    assert_eq!(v["result"]["one_sas"], "10 7");
    let out = run(&["check", "sas", "--ints", "10 7", "7 3 7 10 3 10"]);
    assert_eq!(out.status.code(), Some(0));

    // a declared letter that never occurs is a length-one SAS
    let v = json(&["analyze", "--alphabet", "abc", "abab"]);
    assert_eq!(v["iota"], 0);
    assert_eq!(v["result"]["one_sas"], "c");

    assert_eq!(run(&["analyze", ""]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--ints", "1 x"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}
