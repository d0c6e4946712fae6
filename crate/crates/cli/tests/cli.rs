use std::process::{Command, Output};

use serde_json::Value;

fn hcpn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcpn")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = hcpn(args);
    let doc: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().expect("exit code"), doc)
}

#[test]
fn realizable_examples() {
    let (code, doc) = json(&["realizable", "--dim", "4", "5", "10", "10", "5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["payload"]["realizable"], true);
    assert_eq!(doc["payload"]["decomposition"], serde_json::json!([5, 0, 0, 0]));

    let (code, doc) = json(&["realizable", "--dim", "4", "0", "1", "0", "0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["realizable"], false);
    assert!(doc["payload"]["decomposition"].is_null());

    let (code, doc) = json(&["realizable", "--dim", "4", "1", "2"]);
    assert_eq!(code, 64);
    assert_eq!(doc["status"], "error");
}

#[test]
fn realizable_negative_and_large_entries() {
    let (code, doc) = json(&["realizable", "--dim", "2", "-3", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["realizable"], true);
    let big = "90071992547409930";
    let (code, doc) = json(&["realizable", "--dim", "1", big]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["chern"][0], big);
    assert_eq!(doc["payload"]["decomposition"][0], big);
}

#[test]
fn acs_cp4_standard() {
    let (code, doc) = json(&["acs", "--dim", "4", "--m", "0", "--n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["a"], serde_json::json!([-25, -5, -1, 1, 5, 25]));
    assert_eq!(doc["payload"]["divisor_target"], 25);
}

#[test]
fn acs_cp5_explicit_structure() {
    let (code, doc) = json(&["acs", "--dim", "5", "--m", "2", "--n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["e_coefficients"], serde_json::json!([6, 24, 0, 86, -62]));
    assert_eq!(doc["payload"]["passed"], true);
}

#[test]
fn acs_cp6_m16() {
    let args = ["acs", "--dim", "6", "--m", "16", "--n", "11", "--q", "23", "--a-max", "30", "--c-max", "30"];
    let (code, doc) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["exists"], true);
    assert_eq!(doc["payload"]["criterion"], "consistent");

    let mut published = args.to_vec();
    published.extend(["--criterion", "published"]);
    let (code, doc) = json(&published);
    assert_eq!(code, 1);
    assert_eq!(doc["payload"]["exists"], false);
    assert!(!doc["payload"]["direct_solutions"].as_array().unwrap().is_empty());
}

#[test]
fn acs_cp6_standard_published() {
    let args = ["acs", "--dim", "6", "--m", "0", "--n", "0", "--q", "0", "--a-max", "40", "--c-max", "40"];
    let (code, doc) = json(&[&args[..], &["--criterion", "published"]].concat());
    assert_eq!(code, 0);
    let sols = doc["payload"]["solutions"].as_array().unwrap();
    let has = |a: i64, c: i64| sols.iter().any(|s| s["a"] == a && s["c"] == c);
    assert!(has(1, 1) && has(7, 35));
}

#[test]
fn acs_errors() {
    let (code, doc) = json(&["acs", "--dim", "6", "--m", "16", "--n", "12", "--q", "23"]);
    assert_eq!(code, 2);
    assert_eq!(doc["status"], "violation");
    assert!(doc["payload"]["equation"].as_str().unwrap().contains("1488q"));

    let (code, _) = json(&["acs", "--dim", "4", "--m", "1", "--n", "0"]);
    assert_eq!(code, 2);
    let (code, _) = json(&["acs", "--dim", "6", "--m", "0", "--n", "0"]);
    assert_eq!(code, 64);
    let (code, _) = json(&["acs", "--dim", "7", "--m", "0", "--n", "0"]);
    assert_eq!(code, 64);
    let (code, _) = json(&["acs", "--dim", "4", "--m", "x", "--n", "0"]);
    assert_eq!(code, 64);
}

#[test]
fn tables_match_golden_files() {
    let cases: [(&[&str], &str); 3] = [
        (&["table", "mod31", "--csv"], include_str!("../golden/mod31.csv")),
        (&["table", "pontrjagin-omega", "--dim", "6", "--csv"], include_str!("../golden/pontrjagin_omega_d6.csv")),
        (
            &["table", "divisor-targets", "--dim", "4", "--m-max", "34", "--csv"],
            include_str!("../golden/divisor_targets_d4.csv"),
        ),
    ];
    for (args, golden) in cases {
        let out = hcpn(args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden, "{args:?}");
    }
    let (code, doc) = json(&["table", "mod31"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["rows"].as_array().unwrap().len(), 30);
    let (code, _) = json(&["table", "nope"]);
    assert_eq!(code, 64);
}

#[test]
fn verify_suites() {
    let (code, doc) = json(&["verify", "cp5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["passed"], true);

    let (code, doc) = json(&["verify", "cp6"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = doc["payload"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"mod31_table"));
    assert!(doc["payload"]["literature"].is_array());

    let (code, _) = json(&["verify", "bogus"]);
    assert_eq!(code, 64);
}

#[test]
fn deterministic_output() {
    for args in [
        &["verify", "chernvec", "--seed", "7"][..],
        &["acs", "--dim", "4", "--m", "6", "--n", "3"][..],
        &["table", "mod31"][..],
    ] {
        let a = hcpn(args);
        let b = hcpn(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn elapsed_goes_to_stderr() {
    let out = hcpn(&["table", "mod31", "--csv"]);
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("elapsed_ms: "));
}
