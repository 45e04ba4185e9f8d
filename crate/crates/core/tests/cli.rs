//! End-to-end checks of the `ostar` binary: output formats and exit codes.

use std::process::{Command, Output};

fn ostar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ostar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn neighbors_text() {
    let out = ostar(&["neighbors", "12345", "--scheme", "fujita"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "2 21345 out\n3 32145 out\n4 42315 in\n5 52341 in\n"
    );
    let out = ostar(&["neighbors", "12345", "--scheme", "day-tripathi"]);
    assert!(stdout(&out).contains("3 32145 in"));
}

#[test]
fn classify_text() {
    let out = ostar(&["classify", "21435", "12345"]);
    let text = stdout(&out);
    let keys: Vec<&str> = text.lines().map(|l| l.split('=').next().unwrap()).collect();
    assert_eq!(
        keys,
        ["S", "SL", "SR", "ULL", "URR", "ULR", "URL", "X", "chi"]
    );
    assert!(text.contains("ULR={4}\nURL={3}\nX={3,4}\n"));
}

#[test]
fn route_trace_text() {
    let out = ostar(&["route", "21345", "12345", "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let first = text.lines().next().unwrap();
    assert_eq!(
        first,
        "1 21345 --4--> 41325 pre-final-crossing case=3.2 phase=2"
    );
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn route_json() {
    let out = ostar(&["route", "21345", "12345", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["source"], "21345");
    assert_eq!(v["target"], "12345");
    assert_eq!(v["scheme"], "fujita");
    assert_eq!(v["length"], 5);
    let hop = &v["hops"][1];
    for key in ["index", "node", "link", "move", "case", "phase"] {
        assert!(hop.get(key).is_some(), "missing {key}");
    }
    assert_eq!(hop["move"], "final-crossing");
    assert_eq!(hop["phase"], 2);
}

#[test]
fn classic_route_summary() {
    let out = ostar(&["route", "23145", "12345", "--classic"]);
    assert_eq!(stdout(&out), "length=2 path=23145 32145 12345\n");
}

#[test]
fn distance_prints_one_integer() {
    let out = ostar(&["distance", "14523", "12345"]);
    assert_eq!(stdout(&out), "6\n");
    let out = ostar(&[
        "distance",
        "21345",
        "12345",
        "--directed",
        "--scheme",
        "fujita",
    ]);
    let d: usize = stdout(&out).trim().parse().unwrap();
    assert!((1..=5).contains(&d));
}

#[test]
fn diameter_line() {
    let out = ostar(&["diameter", "5", "--directed", "--mode", "orbit"]);
    let text = stdout(&out);
    assert!(
        text.starts_with("n=5 scheme=fujita directed=true diameter="),
        "{text}"
    );
    assert!(text.contains(" witness=12345->"));
    let out = ostar(&["diameter", "5"]);
    assert!(stdout(&out).contains("directed=false diameter=6 "));
}

#[test]
fn witness_output() {
    assert_eq!(stdout(&ostar(&["witness", "5"])), "13254\n");
    let out = ostar(&["witness", "8", "--variant", "even-refined"]);
    assert_eq!(stdout(&out), "13254786\n");
    assert_eq!(
        ostar(&["witness", "6", "--variant", "even-refined"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn table_formats() {
    let out = ostar(&["table", "3..5", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,undirected,fujita,daytripathi,lower,upper,mode")
    );
    assert!(lines.next().unwrap().starts_with("3,3,"));
    assert_eq!(text.lines().count(), 4);

    let out = ostar(&["table", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["undirected"], 6);
    assert_eq!(v["upper"], 12);
}

#[test]
fn verify_exit_codes() {
    let out = ostar(&["verify", "5", "--checks", "theorem2,cor2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("overall PASS"));

    let out = ostar(&["verify", "5", "--checks", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));

    let out = ostar(&[
        "verify",
        "5",
        "--checks",
        "split-merge",
        "--json",
        "--seed",
        "3",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overall"], true);
    assert_eq!(v["checks"][0]["population"], 120 * 120 * 4);
}

#[test]
fn verification_failure_exits_one() {
    // The n=6 phase checks hit the known Case 2.3 gap.
    let out = ostar(&["verify", "6", "--checks", "phase-props", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("overall FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ostar(&["route", "123", "1234"]).status.code(), Some(2));
    assert_eq!(ostar(&["route", "1123", "1234"]).status.code(), Some(2));
    assert_eq!(ostar(&["--no-such-flag"]).status.code(), Some(2));
    assert_eq!(
        ostar(&["neighbors", "12345", "--scheme", "torus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ostar(&["route", "21345", "12345", "--scheme", "day-tripathi"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ostar(&["diameter", "9", "--mode", "exhaustive"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ostar(&["classify", "123", "321", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
}
