use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn sepvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepvol")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn four_d_scenarios_table() {
    let out = sepvol(&["scenarios", "--dim", "4", "--samples", "2000"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 20);
    assert_eq!(rows.iter().filter(|r| r["trivial"] == true).count(), 12);
    for r in rows.iter().filter(|r| r["trivial"] == true) {
        assert_eq!(r["probability"]["value"], 1.0);
    }
}

#[test]
fn scenarios_csv_is_rectangular() {
    let out = sepvol(&["scenarios", "--dim", "3", "--samples", "1000", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let width = reader.headers().unwrap().len();
    let records: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 15);
    assert!(records.iter().all(|r| r.len() == width));
}

#[test]
fn seven_d_bound_row() {
    let out = sepvol(&["scenarios", "--dim", "7", "--constraint", "one-3x3-pt-minor", "--samples", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("pi^4/172032"), "{text}");
}

#[test]
fn hs_total_by_quadrature() {
    let out = sepvol(&["estimate", "--metric", "hs", "--system", "2x2", "--quantity", "total-volume", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["method"], "quadrature");
    assert!((v["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-6);
}

#[test]
fn sampled_estimate_is_reproducible_across_thread_counts() {
    let args = ["estimate", "--metric", "hs", "--quantity", "sep-probability", "--samples", "2e4", "--seed", "7"];
    let one = sepvol(&[&["--threads", "1"], &args[..]].concat());
    let two = Command::new(env!("CARGO_BIN_EXE_sepvol")).env("SEPVOL_THREADS", "2").args(args).output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    let p = json(&one)["estimate"]["value"].as_f64().unwrap();
    assert!((p - 0.242379).abs() < 0.02, "{p}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["estimate", "--metric", "kubo-mori", "--quantity", "sep-probability"][..],
        &["estimate", "--metric", "hs", "--quantity", "sep-hyperarea"],
        &["estimate", "--metric", "hs", "--system", "2x2-real", "--quantity", "sep-volume"],
        &["estimate", "--metric", "nope", "--quantity", "total-volume"],
        &["scenarios", "--dim", "8"],
        &["scenarios", "--dim", "4", "--samples", "many"],
    ] {
        let out = sepvol(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn manifest_replays_and_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fit.json");
    let p = path.to_str().unwrap();
    let out = sepvol(&["fit-predict", "--form", "two-term", "--m1", "3", "--m2", "3", "--out", p]);
    assert_eq!(out.status.code(), Some(0));

    let mut m: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m["command"], "fit-predict");
    let a = m["payload"]["fit"]["a"].as_f64().unwrap();
    assert!((a - 1.26422).abs() < 1e-3, "{a}");
    assert_eq!(sepvol(&["replay", p]).status.code(), Some(0));

    m["payload"]["fit"]["a"] = Value::from(a * 1.001);
    fs::write(&path, serde_json::to_string(&m).unwrap()).unwrap();
    assert_eq!(sepvol(&["replay", p]).status.code(), Some(1));
}

#[test]
fn sampled_manifest_replays_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("est.json");
    let p = path.to_str().unwrap();
    let out = sepvol(&["estimate", "--metric", "bures", "--quantity", "sep-probability", "--samples", "5000", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(sepvol(&["replay", p]).status.code(), Some(0));
}

#[test]
fn face_density_fault_is_caught() {
    let out = sepvol(&["verify", "--suite", "exact", "--inject-fault", "face-density"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text.lines().find(|l| l.contains("b/a = 31119/2")).expect("b/a check reported");
    assert!(line.starts_with("[FAIL]"), "{line}");
    // scenario counts do not depend on the face density
    assert!(text.lines().any(|l| l.starts_with("[PASS]") && l.contains("scenarios")));
}

#[test]
fn qutrit_constant() {
    let out = sepvol(&["fit-predict", "--form", "qutrit"]);
    assert_eq!(out.status.code(), Some(0));
    let c = json(&out)["fit"]["c"].as_f64().unwrap();
    assert!((c / 986304.0 - 1.0).abs() < 0.01, "{c}");
}
