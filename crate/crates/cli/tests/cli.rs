use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn mindist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mindist")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json", "--no-timings"]);
    let out = mindist(&all);
    let v = serde_json::from_slice(&out.stdout).expect("valid json");
    (v, out.status.code().unwrap())
}

fn method<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["methods"].as_array().unwrap().iter().find(|m| m["name"] == name).unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("mindist-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn g1_report_from_file() {
    let path = temp_file("g1", "field F2\n3 4\n1 0 0 1\n0 1 0 1\n0 0 1 1\n");
    let (r, code) = json(&["report", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "ok");
    for m in ["brute", "tutte", "afold", "berget", "alpha-fitt", "binary"] {
        assert_eq!(method(&r, m)["d"], 2, "{m}");
    }
    assert_eq!(method(&r, "alpha-fitt")["extra"]["alpha"], 3);
    // A file gives no rational model, so the GF(2) code has no inverse system.
    assert_eq!(method(&r, "inverse")["status"], "error");
}

#[test]
fn g2_inverse_bound_is_strict() {
    let (r, code) = json(&["report", "--example", "paper-g2"]);
    assert_eq!(code, 0);
    assert_eq!(method(&r, "brute")["d"], 3);
    let inverse = r["bounds"].as_array().unwrap().iter().find(|b| b["name"] == "inverse").unwrap();
    assert_eq!(inverse["value"], 2);
    assert_eq!(inverse["satisfied"], true);
}

#[test]
fn braid_ot_bound() {
    let (r, _) = json(&["report", "--example", "braid6", "--method", "brute,ot", "--prime", "65521"]);
    let ot = method(&r, "ot");
    assert_eq!(ot["extra"]["alpha"], 2);
    assert_eq!(ot["extra"]["delta"], 1);
    assert_eq!(r["bounds"][0]["value"], 2);
    assert_eq!(method(&r, "brute")["d"], 3);
    assert_eq!(r["verdict"], "ok");
}

#[test]
fn subcommands_pick_their_method() {
    for (cmd, name) in [
        ("tutte", "tutte"),
        ("alpha-fitt", "alpha-fitt"),
        ("inverse", "inverse"),
        ("binary", "binary"),
        ("mds", "mds"),
    ] {
        let (r, code) = json(&[cmd, "--example", "hamming74", "--field", "F2"]);
        let names: Vec<&str> = r["methods"].as_array().unwrap().iter().map(|m| m["name"].as_str().unwrap()).collect();
        assert_eq!(names, [name], "{cmd}");
        assert_eq!(code, 0);
    }
    let (r, _) = json(&["distance", "--example", "id-3"]);
    assert_eq!(r["methods"].as_array().unwrap().len(), 3);
    assert_eq!(method(&r, "afold")["d"], 1);
}

#[test]
fn example_over_another_field() {
    let (r, _) = json(&["distance", "--example", "paper-g2", "--field", "Q", "--method", "tutte,afold"]);
    assert_eq!(r["code"]["field"], "Q");
    assert_eq!(method(&r, "afold")["d"], 3);
}

#[test]
fn json_is_stable_and_text_has_verdict() {
    let a = mindist(&["report", "--example", "paper-c2", "--format", "json", "--no-timings"]);
    let b = mindist(&["report", "--example", "paper-c2", "--format", "json", "--no-timings"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(mindist(&["report", "--example", "paper-c2"]).stdout).unwrap();
    assert!(text.contains("verdict: ok"));
}

#[test]
fn errors_exit_with_one() {
    let bad = temp_file("bad", "field F6\n1 1\n1\n");
    let out = mindist(&["distance", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("prime"));

    let bad = temp_file("pos", "field F5\n1 2\n1 x\n");
    let out = mindist(&["distance", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    assert_eq!(mindist(&["distance"]).status.code(), Some(1));
    assert_eq!(mindist(&["distance", "--example", "nope"]).status.code(), Some(1));
    assert_eq!(mindist(&["report", "--example", "rep-3", "--method", "fast"]).status.code(), Some(1));
    assert_eq!(mindist(&["report", "--example", "rep-3", "--budget", "colour=3"]).status.code(), Some(1));
    assert_eq!(mindist(&["--help"]).status.code(), Some(0));
}

#[test]
fn budget_limits_are_reported_per_method() {
    let (r, code) = json(&["distance", "--example", "hamming74", "--budget", "enumeration=8"]);
    assert_eq!(method(&r, "brute")["status"], "error");
    assert_eq!(method(&r, "tutte")["d"], 3);
    assert_eq!(code, 0);
}

#[test]
fn list_examples_names_builtins() {
    let out = String::from_utf8(mindist(&["list-examples"]).stdout).unwrap();
    for name in ["paper-g1", "paper-g2", "paper-c2", "braid6", "hamming74", "rep-<n>", "id-<k>"] {
        assert!(out.contains(name), "{name}");
    }
}
