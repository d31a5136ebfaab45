use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sinecert")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn verify_gamma_passes() {
    let out = run(&["verify", "--family", "gamma", "--n", "30", "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["certificates"].as_array().unwrap().len(), 30);
    assert!(r["certificates"].as_array().unwrap().iter().all(|c| c["certificate"]["verdict"] == "ExactNonneg"));
    assert!(r["environment"]["version"].is_string());
    assert!(r["constants"].as_array().unwrap().iter().any(|c| c["name"] == "alpha"));
}

#[test]
fn verify_inline_counterexample_reports_violation() {
    let out = run(&["verify", "--coeffs", "2,1,4/3,1,6/5,0,0,3/4", "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["results"]["first_violation"], 8);
}

#[test]
fn verify_single_term() {
    let out = run(&["verify", "--family", "delta", "--n", "1", "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["certificates"][0]["certificate"]["poly"], "3");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--family", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--coeffs", "1,1e-3", "--mode", "exact"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--cond", "foo", "--family", "gamma"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "--param", "beta", "--range", "2:1"]).status.code(), Some(2));
}

#[test]
fn floats_accepted_in_numeric_mode() {
    let out = run(&["verify", "--coeffs", "1,1e-3", "--mode", "numeric"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["certificates"][1]["certificate"]["verdict"], "NumericEvidence");
}

#[test]
fn check_delta_conditions_with_equalities() {
    let out = run(&["check", "--cond", "v,kv2", "--family", "delta", "--n", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    for res in r["results"].as_array().unwrap() {
        assert_eq!(res["report"]["holds"], true);
        assert!(!res["report"]["equalities"].as_array().unwrap().is_empty());
    }
}

#[test]
fn check_belov_and_dominance() {
    assert_eq!(run(&["check", "--cond", "belov", "--family", "vietoris_c", "--n", "40"]).status.code(), Some(0));
    assert_eq!(
        run(&["check", "--cond", "dominates", "--a", "ones", "--b", "gamma", "--n", "40"]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["check", "--cond", "dominates", "--a", "ones", "--b", "gamma", "--n", "40", "--terms", "all"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn scan_point_and_csv() {
    let out = run(&["scan", "--param", "gamma_exp", "--point", "0.23", "--n", "60"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&out)["results"]["failing"].as_array().unwrap().contains(&Value::from(6)));

    let dir = std::env::temp_dir().join(format!("sinecert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("scan.csv");
    let json = dir.join("scan.json");
    let out = run(&[
        "scan",
        "--param",
        "gamma_exp",
        "--range",
        "0.20:0.30",
        "--n",
        "60",
        "--steps",
        "10",
        "--csv",
        csv.to_str().unwrap(),
        "--out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next(), Some("parameter,first_failing,min_value"));
    assert_eq!(text.lines().count(), 12);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let b = r["results"]["boundary"].as_f64().unwrap();
    assert!((0.23..=0.26).contains(&b), "boundary {b}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exact_results_are_deterministic() {
    let args = ["--threads", "2", "verify", "--family", "phi1:3913/5000", "--n", "8", "--mode", "exact"];
    let a = report(&run(&args));
    let b = report(&run(&args));
    assert_eq!(a["certificates"], b["certificates"]);
    assert_eq!(a["environment"]["threads"], 2);
}

#[test]
fn reproduce_single_criterion() {
    let out = run(&["reproduce", "--criterion", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = report(&out)["results"].as_array().unwrap().clone();
    assert!(rows.iter().all(|r| r["pass"] == true && r["criterion"] == 4));
    assert_eq!(run(&["reproduce", "--criterion", "13"]).status.code(), Some(2));
}
