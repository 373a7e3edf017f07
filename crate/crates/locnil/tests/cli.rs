//! End-to-end tests of the `locnil` binary: output shapes, exit codes,
//! determinism of the comparison form, and the LOCNIL_CAP escape hatch.

use std::process::{Command, Output};

fn locnil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locnil"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_agamma_renders_iso_class() {
    let out = locnil(&["compute", "agamma", "--module", "Z/8", "--a", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2·Z/8 ≅ Z/4\n");
}

#[test]
fn compute_envelope_and_snf() {
    let out = locnil(&["compute", "envelope", "--module", "Z/12"]);
    assert_eq!(stdout(&out), "{0, 6}\n");
    let out = locnil(&["compute", "snf", "--matrix", "2,4;6,8"]);
    assert_eq!(stdout(&out), "diag(2,4)\n");
}

#[test]
fn compute_cohomology_json_is_pinned() {
    let out = locnil(&[
        "compute", "cohomology", "--module", "Z/3", "--a", "3", "--format", "json",
    ]);
    assert_eq!(
        stdout(&out),
        "{\"module\":\"Z/3\",\"a\":\"3\",\"a_reduced\":true,\"h0\":\"Z/3\",\"ext0\":\"Z/3\",\
         \"degree0_agree\":true,\"h1\":\"0\",\"ext1\":\"Z/3\",\"degree1_agree\":false}\n"
    );
    let out = locnil(&[
        "compute", "cohomology", "--module", "Z", "--a", "2", "--format", "json",
    ]);
    assert_eq!(
        stdout(&out),
        "{\"module\":\"Z\",\"a\":\"2\",\"a_reduced\":true,\"h0\":\"0\",\"ext0\":\"0\",\
         \"degree0_agree\":true,\"h1\":\"(Z[1/2]/Z)^1\",\"ext1\":\"Z/2\",\"degree1_agree\":false}\n"
    );
}

#[test]
fn verify_is_deterministic_without_timing() {
    let args = [
        "verify", "--suite", "paper-regressions", "--format", "json", "--seed", "5",
    ];
    let a = locnil(&args);
    let b = locnil(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(!stdout(&a).contains("millis"));
    // summary is the trailing object
    let last = stdout(&a);
    let last = last.trim_end().lines().last().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn verify_count_zero_keeps_exhaustive_parts() {
    let out = locnil(&["verify", "--suite", "poly-theorem", "--count", "0", "--seed", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("poly-membership-exhaustive"));
}

#[test]
fn exit_codes() {
    // 2: usage / parse errors
    assert_eq!(locnil(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(
        locnil(&["compute", "gamma", "--module", "Z/oops", "--a", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(locnil(&["compute", "gamma", "--a", "2"]).status.code(), Some(2));
    // 3: resource cap exceeded
    assert_eq!(
        locnil(&["compute", "poly", "--n", "100", "--a", "10", "--poly", "10 + 10*x^3", "--cap", "50"])
            .status
            .code(),
        Some(3)
    );
    // 0: success
    assert_eq!(locnil(&["explain"]).status.code(), Some(0));
    assert_eq!(locnil(&["explain", "snf-fuzz"]).status.code(), Some(0));
    assert_eq!(locnil(&["explain", "bogus"]).status.code(), Some(2));
}

#[test]
fn cap_env_var_with_flag_precedence() {
    // |Z/2 x Z/2 x Z/2| = 8 exceeds a cap of 7
    let out = Command::new(env!("CARGO_BIN_EXE_locnil"))
        .args(["compute", "radicals", "--module", "Z/2 + Z/2 + Z/2"])
        .env("LOCNIL_CAP", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // the --cap flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_locnil"))
        .args(["compute", "radicals", "--module", "Z/2 + Z/2 + Z/2", "--cap", "64"])
        .env("LOCNIL_CAP", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("locnil-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = locnil(&[
        "verify", "--suite", "snf-fuzz", "--count", "50", "--seed", "1",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.contains("snf-oracle"));
    std::fs::remove_file(&path).ok();
}
