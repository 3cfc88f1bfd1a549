use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgenus")).args(args).env_remove("GENUS_QPREC").output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {:?}", out))
}

fn eval(manifold: &str, series: &str, q: &str) -> (Value, i32) {
    let out = run(&["genus", "eval", "--manifold", manifold, "--series", series, "--q-order", q]);
    (json_of(&out), out.status.code().unwrap())
}

#[test]
fn hp2_elliptic_is_its_signature() {
    let (v, code) = eval("hp2", "elliptic", "3");
    assert_eq!(v["offset"], "0");
    assert_eq!(v["coeffs"], json!(["1", "0", "0"]));
    assert_eq!(v["checks"]["constant"], true);
    assert_eq!(code, 0);
}

#[test]
fn sphere_phi0_vanishes() {
    let (v, code) = eval("sphere8", "phi0", "4");
    assert_eq!(v["coeffs"], json!(["0", "0", "0", "0"]));
    assert_eq!(v["offset"], "-1");
    assert_eq!(code, 0);
}

#[test]
fn k3_phi0_and_signature() {
    let (v, _) = eval("k3", "phi0", "2");
    assert_eq!(v["offset"], "-1/2");
    assert_eq!(v["coeffs"], json!(["2", "40"]));
    assert_eq!(v["checks"]["spin_integrality"], "pass");
    assert_eq!(v["checks"]["half_order_pole"], "pass");
    let (v, code) = eval("k3", "elliptic", "2");
    assert_eq!(v["coeffs"][0], "-16");
    assert_eq!(v["checks"]["signature_divisible_by_16"], "pass");
    assert_eq!(code, 0);
}

#[test]
fn plain_genera() {
    assert_eq!(eval("cp2", "L", "1").0, json!({"offset": "0", "coeffs": ["1"], "checks": {}}));
    assert_eq!(eval("k3", "Ahat", "1").0["coeffs"], json!(["2"]));
    assert_eq!(eval("cp2xcp2", "L", "1").0["coeffs"], json!(["1"]));
}

#[test]
fn cp2_skips_spin_checks() {
    let (v, _) = eval("cp2", "phi0", "3");
    assert_eq!(v["checks"]["spin_integrality"], "not-applicable");
}

#[test]
fn oracles_agree() {
    let out = run(&["genus", "eval", "--manifold", "hp3", "--series", "elliptic", "--q-order", "3", "--oracle", "both"]);
    let v = json_of(&out);
    assert_eq!(v["oracles"], json!({"product": true, "bruteforce": true, "genus": true}));
    assert_eq!(v["coeffs"], json!(["0", "0", "0"]));
    assert!(out.status.success());
    let out = run(&["genus", "eval", "--manifold", "k3", "--series", "phi0", "--q-order", "3", "--oracle", "bruteforce"]);
    assert_eq!(json_of(&out)["coeffs"], json!(["2", "40", "-124"]));
}

#[test]
fn bruteforce_precision_cap_is_a_computation_error() {
    let out = run(&["genus", "eval", "--manifold", "k3", "--series", "phi0", "--q-order", "6", "--oracle", "bruteforce"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json_of(&out)["error"].as_str().unwrap().contains("brute-force"));
}

#[test]
fn manifold_file_input() {
    let (v, _) = eval(&data("hp2_numbers.json"), "elliptic", "2");
    assert_eq!(v["coeffs"], json!(["1", "0"]));
}

#[test]
fn q_order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hgenus"))
        .args(["genus", "eval", "--manifold", "hp2", "--series", "elliptic"])
        .env("GENUS_QPREC", "2")
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["coeffs"], json!(["1", "0"]));
    let v = json_of(&run(&["genus", "eval", "--manifold", "hp2", "--series", "elliptic"]));
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 4);
}

#[test]
fn residual_chain() {
    let out = run(&["codes", "residual", "--file", &data("worked_code.json"), "--iterate"]);
    let v = json_of(&out);
    assert_eq!(v["weights"], json!([4, 2]));
    assert_eq!(v["lengths"], json!([6, 2, 0]));
    assert!(out.status.success());
    let v = json_of(&run(&["codes", "residual", "--file", &data("worked_code.json"), "--word", "001111"]));
    assert_eq!(v["residual"], json!({"length": 2, "rows": ["11"]}));
    assert_eq!(v["residual_d_max"], 2);
}

#[test]
fn code_analysis() {
    let v = json_of(&run(&["codes", "analyze", "--file", &data("worked_code.json")]));
    assert_eq!(v["d_max"], 4);
    assert_eq!(v["rank"], 2);
    let out = run(&["codes", "analyze", "--file", &data("ragged_code.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json_of(&out)["error"].is_string());
}

#[test]
fn action_reports() {
    let out = run(&["action", "analyze", "--file", &data("torus_rank2.json")]);
    let v = json_of(&out);
    assert_eq!(v["theorem_d_triggered"], true);
    let sigma01 = v["involutions"].as_array().unwrap().iter().find(|i| i["sigma"] == "01").unwrap();
    assert_eq!(sigma01["codim"], 4);
    assert!(out.status.success());
    let out = run(&["action", "analyze", "--file", &data("not_effective.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json_of(&out)["error"].as_str().unwrap().contains("not effective"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["genus", "eval", "--manifold", "k3", "--series", "L", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["genus", "eval", "--manifold", "k3", "--series", "sigma"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn computation_errors_exit_one() {
    let out = run(&["genus", "eval", "--manifold", "cp3", "--series", "L"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json_of(&out)["error"].is_string());
}

#[test]
fn output_is_deterministic() {
    let args = ["action", "analyze", "--file", &data("torus_rank2.json"), "--q-order", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["genus", "eval", "--manifold", "cp4", "--series", "elliptic", "--q-order", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn pretty_output_parses_to_the_same_value() {
    let plain = json_of(&run(&["genus", "eval", "--manifold", "hp2", "--series", "phi0", "--q-order", "3"]));
    let pretty = run(&["--pretty", "genus", "eval", "--manifold", "hp2", "--series", "phi0", "--q-order", "3"]);
    assert!(String::from_utf8_lossy(&pretty.stdout).contains('\n'));
    assert_eq!(json_of(&pretty), plain);
}

#[test]
fn selftest_flag() {
    let out = run(&["--selftest"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["pass"], true);
}
