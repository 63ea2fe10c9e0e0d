use std::process::{Command, Output};

use serde_json::Value;

const FAMILY: &str = "X^6 - 3*l*X^4*Y + Y^3";

fn qhlip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhlip"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn stderr_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).expect("stderr is JSON")
}

#[test]
fn positive_family_pair_is_not_equivalent() {
    let o = qhlip(&["classify2", FAMILY, FAMILY, "--let", "l=1", "--beta", "2/1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = qhlip(&[
        "classify2",
        "X^6 - 3*X^4*Y + Y^3",
        "X^6 - 12*X^4*Y + Y^3",
        "--beta",
        "2/1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout_json(&o);
    assert_eq!(v["verdict"], "NotEquivalent");
    assert_eq!(v["reason"]["type"], "HeightsNotPairable");
    assert_eq!(v["reason"]["conditions"][0]["condition"], "a");
    assert_eq!(v["reason"]["attempts"][0]["plus"], "SymbolNotSimilar");
}

#[test]
fn negative_family_pair_is_equivalent_with_certificate() {
    let o = qhlip(&[
        "classify2",
        "X^6 + 3*X^4*Y + Y^3",
        "X^6 + 6*X^4*Y + Y^3",
        "--infer-beta",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["certificate"]["theorem"], "Cor_NoCritPoints");
    assert_eq!(v["beta"], "2/1");
    assert_eq!(v["certificate"]["zygothety"]["phi1"]["type"], "branch");
}

#[test]
fn witness_reports_pass() {
    let o = qhlip(&[
        "witness",
        "X^6 + 3*X^4*Y + Y^3",
        "X^6 + 9*X^4*Y + Y^3",
        "--beta",
        "2/1",
        "--samples",
        "2000",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["report"]["conjugacy_passed"], true);
    assert_eq!(v["report"]["samples"], 2000);
    assert!(v["report"]["max_rel_residual"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn unknown_exit_code() {
    let o = qhlip(&["classify2", "X^4", "X^2*Y", "--beta", "2/1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout_json(&o)["reason"]["type"], "MixedCxdCase");
}

#[test]
fn classify1_examples() {
    let o = qhlip(&["classify1", "t^3 - 3*t + 1", "2*t^3 - 6*t + 2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["pairings"][0]["c_set"]["c"]["rational"], "2");
    let o = qhlip(&["classify1", "-t^2 + 1", "-t^2 - 1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn errors_are_json_on_stderr() {
    let o = qhlip(&["classify1", "t + 0.5", "t"]);
    assert_eq!(o.status.code(), Some(3));
    let e = stderr_json(&o);
    assert_eq!(e["error"]["kind"], "parse");
    assert_eq!(e["error"]["column"], 5);
    assert!(o.stdout.is_empty());

    let o = qhlip(&["classify2", "X^6 + Y^3", "X^6 + Y^3", "--beta", "4/2"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stderr_json(&o)["error"]["kind"], "beta");

    let o = qhlip(&["classify2", "X^6 + Y^3", "X^6 + Y^3"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stderr_json(&o)["error"]["kind"], "usage");

    let o = qhlip(&["classify2", "X^6 + l*Y^3", "X^6 + Y^3", "--beta", "2/1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr_json(&o)["error"]["message"]
        .as_str()
        .unwrap()
        .contains("unbound"));
}

#[test]
fn output_is_byte_deterministic() {
    let args = [
        "classify2",
        "X^6 + 3*X^4*Y + Y^3",
        "X^6 + 6*X^4*Y + Y^3",
        "--beta",
        "2/1",
    ];
    assert_eq!(qhlip(&args).stdout, qhlip(&args).stdout);
    let scan = [
        "scan",
        FAMILY,
        "--param",
        "l",
        "--values=-3,-2,-1,1/4,1,4",
        "--beta",
        "2/1",
    ];
    assert_eq!(qhlip(&scan).stdout, qhlip(&scan).stdout);
}

#[test]
fn scan_examples() {
    let o = qhlip(&[
        "scan",
        FAMILY,
        "--param",
        "l",
        "--values=-3,-2,-1",
        "--beta",
        "2/1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["partition"], serde_json::json!([[0, 1, 2]]));
    let o = qhlip(&[
        "scan", FAMILY, "--param", "l", "--values", "1/4,1,4", "--beta", "2/1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout_json(&o)["partition"],
        serde_json::json!([[0], [1], [2]])
    );
}

#[test]
fn infer_beta_lists_candidates() {
    let o = qhlip(&["infer-beta", "X^6 - 3*X^4*Y + Y^3"]);
    let v = stdout_json(&o);
    assert_eq!(v["candidates"][0]["beta"], "2/1");
    assert_eq!(v["candidates"][0]["degree"], 6);
    let v = stdout_json(&qhlip(&["infer-beta", "X^2*Y"]));
    assert_eq!(v["ambiguous"], true);
}
