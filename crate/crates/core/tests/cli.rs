use std::process::{Command, Output};

use koethe::SpaceDescriptor;
use serde_json::Value;

fn koethe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koethe"))
        .args(args)
        .env_remove("KOETHE_SEED")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn euclidean_norm_example() {
    let out = koethe(&[
        "norm",
        "--space",
        r#"{"type":"lp","p":2,"N":2}"#,
        "--x",
        "3,4",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["value"].as_f64(), Some(5.0));
    assert_eq!(doc["kind"], "exact");
    assert_eq!(doc["seed"], 0);
}

#[test]
fn lorentz_dual_example() {
    let out = koethe(&[
        "dual-norm",
        "--space",
        "lorentz(w=(1,.5,.25),p=1)",
        "--z",
        "1,1,1",
    ]);
    assert!(out.status.success());
    let value = json(&out)["value"].as_f64().unwrap();
    assert!((value - 12.0 / 7.0).abs() < 1e-7);
}

#[test]
fn verify_example() {
    let out = koethe(&[
        "verify",
        "--suite",
        "lorentz-multipliers",
        "--N",
        "8",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["seed"], 7);
    for check in doc["suites"][0]["checks"].as_array().unwrap() {
        assert!(check["max_deviation"].as_f64().unwrap() < 1e-4);
    }
}

#[test]
fn identical_jobs_give_identical_documents() {
    let args = [
        "mult-norm",
        "--domain",
        "lp(p=3)",
        "--target",
        "lorentz(w=k^-0.5,p=1.5)",
        "--alpha",
        "0.3,1,0.7,2",
        "--seed",
        "11",
    ];
    let a = koethe(&args);
    let b = koethe(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_koethe"))
        .args(["norm", "--space", "lp(p=1)", "--x", "1,2"])
        .env("KOETHE_SEED", "123")
        .output()
        .unwrap();
    assert_eq!(json(&out)["seed"], 123);
}

#[test]
fn emitted_descriptors_reparse() {
    let out = koethe(&[
        "mult-norm",
        "--domain",
        "power(r=0.5,lp(p=4))",
        "--target",
        "dual(marcinkiewicz(psi=(1,1.5,1.75)))",
        "--alpha",
        "1,2,3",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    for key in ["domain", "target"] {
        let emitted = doc["diagnostics"][key].to_string();
        let d = SpaceDescriptor::from_json(&emitted).unwrap();
        assert_eq!(SpaceDescriptor::from_json(&d.to_json()).unwrap(), d);
        assert_eq!(d.dim(), 3);
    }
}

#[test]
fn reals_carry_seventeen_significant_digits() {
    let out = koethe(&["norm", "--space", "lp(p=2)", "--x", "1,1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"value\": 1.4142135623730951e0"), "{text}");
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        vec!["norm", "--space", "lp(p=0.5)", "--x", "1,2"],
        vec!["norm", "--space", "lp(p=2,N=3)", "--x", "1,2"],
        vec!["norm", "--space", "nonsense", "--x", "1"],
        vec!["norm", "--x", "1"],
        vec![
            "dual-norm",
            "--space",
            "lp(p=2)",
            "--z",
            "1",
            "--config",
            "{\"bogus\":1}",
        ],
        vec!["verify", "--suite", "nope"],
    ] {
        let out = koethe(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = koethe(&["norm", "--space", "lp(p=0.5)", "--x", "1,2"]);
    let doc: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(doc["error"]["kind"], "construction");
}

#[test]
fn csv_verify_table() {
    let out = koethe(&[
        "verify",
        "--suite",
        "convexification",
        "--cases",
        "20",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("suite,check,cases,failures,max_deviation,tolerance,passed")
    );
    assert!(lines.next().unwrap().starts_with("convexification,"));
}

#[test]
fn summing_precondition_is_reported() {
    let out = koethe(&[
        "summing-estimate",
        "--index",
        "lp(p=1)",
        "--p",
        "2",
        "--n",
        "1",
        "--domain",
        "lp(p=1)",
        "--target",
        "lp(p=1)",
        "--alpha",
        "1,1,1,1,1,1",
        "--config",
        r#"{"summing":{"inclusion_cap":1.0}}"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
    let doc: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(doc["error"]["kind"], "precondition");
}
