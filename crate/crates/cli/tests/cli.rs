use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn gerbe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gerbe")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn cohomology_text() {
    let o = gerbe(&["cohomology", "-P", &data("z2.json"), "-A", &data("z2_trivial.json"), "-n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "H^2 = Z/2");
    let o = gerbe(&["cohomology", "-P", &data("z2.json"), "-A", &data("z3_sign.json"), "-n", "1"]);
    assert_eq!(stdout(&o).trim(), "H^1 = 0");
}

#[test]
fn cohomology_json_has_representatives() {
    let o = gerbe(&["--json", "cohomology", "-P", &data("s3.json"), "-A", &data("z2_trivial.json"), "-n", "1"]);
    let v = json(&o);
    assert_eq!(v["kind"], "cohomology");
    assert_eq!(v["order"], 2);
    assert_eq!(v["representatives"].as_array().unwrap().len(), 1);
}

#[test]
fn h2_json_schema() {
    let o = gerbe(&["classify", "h2", "--twotype", &data("twotype_split.json"), "--G", &data("z2.json"), "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["kind"], "h2");
    assert_eq!(v["order"], 4);
    assert_eq!(v["invariant_factors"], serde_json::json!([2, 2]));
    let terms = v["sequence"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert!(v["sequence"]["exact"].as_array().unwrap().iter().all(|e| e == true));
}

#[test]
fn split_requires_trivial_k() {
    let ok = gerbe(&["classify", "h2", "--twotype", &data("twotype_split.json"), "--G", &data("z2.json"), "--split"]);
    assert!(ok.status.success());
    assert!(stdout(&ok).contains("section true, homomorphism true, product true"));
    let bad = gerbe(&["classify", "h2", "--twotype", &data("twotype_k.json"), "--G", &data("z2.json"), "--split"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn h1_from_complex() {
    let o = gerbe(&["classify", "h1", "--pi1", &data("rp2.json"), "--G", &data("s3.json")]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2 classes"));
    let o = gerbe(&["--json", "classify", "h1", "--pi1", &data("circle.json"), "--G", &data("s3.json")]);
    assert_eq!(json(&o)["classes"], 3);
}

#[test]
fn pi1_of_projective_plane() {
    let o = gerbe(&["pi1", "--complex", &data("rp2.json")]);
    assert!(stdout(&o).contains("abelianization: Z/2"));
    let raw = gerbe(&["--json", "pi1", "--complex", &data("rp2.json"), "--raw"]);
    assert_eq!(json(&raw)["generators"], 10);
}

#[test]
fn extensions_and_gerbes() {
    let o = gerbe(&["--json", "classify", "extensions", "--P", &data("z2.json"), "--G", &data("z3.json")]);
    assert_eq!(json(&o)["classes"], 2);
    let o = gerbe(&["--json", "classify", "gerbes", "--twotype", &data("twotype_k.json"), "--G", &data("s3.json")]);
    assert!(o.status.success());
    assert_eq!(json(&o)["kind"], "gerbes");
}

#[test]
fn crossed_modules() {
    let o = gerbe(&["check-crossed", "--crossed", &data("crossed_z2.json")]);
    assert!(o.status.success());
    let o = gerbe(&["--json", "classify", "h0-crossed", "--pi1", &data("z2.json"), "--crossed", &data("crossed_z2.json")]);
    assert_eq!(json(&o)["order"], 4);
}

#[test]
fn exit_codes() {
    let cap = gerbe(&["classify", "h1", "--pi1", &data("circle.json"), "--G", &data("s3.json"), "--cap-homs", "2"]);
    assert_eq!(cap.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&cap.stderr).contains("exceeds cap"));
    let missing = gerbe(&["cohomology", "-P", &data("nope.json"), "-A", &data("z2_trivial.json"), "-n", "1"]);
    assert_eq!(missing.status.code(), Some(2));
    let wrong = gerbe(&["cohomology", "-P", &data("z2.json"), "-A", &data("z3.json"), "-n", "1"]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_and_catches_faults() {
    let args = ["verify", "--suite", "gcd", "--suite", "split", "--seed", "7"];
    let a = gerbe(&args);
    let b = gerbe(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let f = gerbe(&["verify", "--suite", "hopf", "--inject-fault", "sequence-map"]);
    assert_eq!(f.status.code(), Some(1));
    assert!(stdout(&f).contains("FAIL"));
}
