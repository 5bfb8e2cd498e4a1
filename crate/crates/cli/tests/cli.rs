use std::fs;
use std::path::Path;

use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn dormancy() -> Command {
    Command::cargo_bin("dormancy").unwrap()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn count_base_case() {
    dormancy()
        .args([
            "count",
            "--p",
            "7",
            "--profile",
            "3,3,3",
            "--method",
            "recursive",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("recursive   1"));
}

#[test]
fn count_all_methods_agree_and_persist() {
    let dir = tempfile::tempdir().unwrap();
    dormancy()
        .args([
            "count",
            "--p",
            "7",
            "--profile",
            "3,3,3,3",
            "--method",
            "all",
            "--chains",
            "--out",
        ])
        .arg(dir.path())
        .assert()
        .success()
        .stdout(predicate::str::contains("chain-enum  3"));
    let doc = read_json(&dir.path().join("count.json"));
    let counts: Vec<&str> = doc["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["count"].as_str().unwrap())
        .collect();
    assert_eq!(counts, vec!["3", "3", "3"]);
    assert_eq!(doc["chains"].as_array().unwrap().len(), 3);
    assert_eq!(doc["report"]["failed"], 0);
    let csv = fs::read_to_string(dir.path().join("count.csv")).unwrap();
    assert!(csv.starts_with("p,profile,degree,method,count\n"));
    assert_eq!(csv.lines().count(), 4);
    assert_eq!(
        read_json(&dir.path().join("manifest.json"))["command"],
        "count"
    );
}

#[test]
fn count_rejects_index_at_p() {
    dormancy()
        .args(["count", "--p", "5", "--profile", "3,3,5"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("outside [1, p - 1]"));
}

#[test]
fn census_three_points() {
    dormancy()
        .args([
            "census", "--p", "7", "--points", "0,1,inf", "--orders", "3,3,3",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("orbit_count 1"));
    dormancy()
        .args([
            "census", "--p", "5", "--points", "0,1,inf", "--orders", "1,1,1",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("orbit_count 1"));
}

#[test]
fn census_parity_error() {
    dormancy()
        .args([
            "census", "--p", "5", "--points", "0,1,inf", "--orders", "2,2,2",
        ])
        .assert()
        .code(2)
        .stderr(predicate::str::contains(
            "profile violates Riemann–Hurwitz parity",
        ));
}

#[test]
fn census_budget_exhaustion() {
    let dir = tempfile::tempdir().unwrap();
    dormancy()
        .args([
            "census",
            "--p",
            "5",
            "--points",
            "0,1,2,inf",
            "--orders",
            "3,3,3,3",
            "--budget",
            "2",
            "--out",
        ])
        .arg(dir.path())
        .assert()
        .code(3)
        .stdout(predicate::str::contains("incomplete"));
    let doc = read_json(&dir.path().join("census.json"));
    assert_eq!(doc["status"]["status"], "incomplete");
    assert!(doc["orbit_count"].is_null());
}

#[test]
fn census_replay_is_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    dormancy()
        .args([
            "--threads",
            "1",
            "census",
            "--p",
            "5",
            "--points",
            "0,1,2,inf",
            "--orders",
            "3,3,3,3",
            "--sweep",
            "1,2",
        ])
        .arg("--out")
        .arg(a.path())
        .assert()
        .success();
    dormancy()
        .args(["--threads", "3", "--manifest"])
        .arg(a.path().join("manifest.json"))
        .arg("--out")
        .arg(b.path())
        .assert()
        .success();
    for f in ["census.csv", "census.json"] {
        assert_eq!(
            fs::read(a.path().join(f)).unwrap(),
            fs::read(b.path().join(f)).unwrap(),
            "{f}"
        );
    }
    let sweep = read_json(&a.path().join("census.json"));
    assert_eq!(sweep["stabilized"], Value::Null);
    assert_eq!(sweep["results"][1]["orbit_count"], 2);
}

fn write(dir: &Path, name: &str, text: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn pcurv_examples() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(
        dir.path(),
        "zero.toml",
        "p = 7\npoints = [0, 1]\nsplitting = [0, 0]\n",
    );
    dormancy()
        .arg("pcurv")
        .arg(&zero)
        .assert()
        .success()
        .stdout(predicate::str::contains("dormant: true"));

    let diag = write(
        dir.path(),
        "diag.toml",
        "p = 5\npoints = [0]\nsplitting = [0, 0]\n[matrix]\na11 = { num = [1], den = [0, 1] }\na22 = { num = [-1], den = [0, 1] }\n",
    );
    let out = tempfile::tempdir().unwrap();
    dormancy()
        .arg("pcurv")
        .arg(&diag)
        .arg("--out")
        .arg(out.path())
        .assert()
        .success()
        .stdout(predicate::str::contains("rho 1").and(predicate::str::contains("dormant: true")));
    let doc = read_json(&out.path().join("pcurv.json"));
    assert_eq!(doc["points"][0]["radius"], 1);
    assert_eq!(doc["dormant"], true);

    let bad = write(
        dir.path(),
        "bad.toml",
        "p = 5\npoints = [0]\nsplitting = [0, 0]\n[matrix]\na11 = { num = [1], den = [0, 0, 1] }\n",
    );
    dormancy()
        .arg("pcurv")
        .arg(&bad)
        .assert()
        .code(2)
        .stderr(predicate::str::contains("pole of order 2"));

    let garbled = write(dir.path(), "garbled.toml", "p = 5\npoints = 0\n");
    dormancy().arg("pcurv").arg(&garbled).assert().code(2);
}

#[test]
fn pcurv_indigenous_level() {
    // three marked points, O(1/2) + O(-1/2) doubled: level 1 = r - 2
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "ind.toml",
        "p = 5\npoints = [0, 1, 2]\nsplitting = [1, 0]\n[matrix]\na21 = { num = [1], den = [0, 1] }\n",
    );
    dormancy()
        .arg("pcurv")
        .arg(&f)
        .assert()
        .success()
        .stdout(predicate::str::contains("indigenous: true"));
}

#[test]
fn verify_closed_forms() {
    let dir = tempfile::tempdir().unwrap();
    dormancy()
        .args(["verify", "--suite", "closed-forms", "--p", "3,5,7", "--out"])
        .arg(dir.path())
        .assert()
        .success()
        .stdout(predicate::str::contains("9 passed, 0 failed"));
    let report = read_json(&dir.path().join("report.json"));
    let checks = report["checks"].as_array().unwrap();
    let expected: Vec<&str> = checks
        .iter()
        .map(|c| c["expected"].as_str().unwrap())
        .collect();
    for v in ["1", "5", "14", "16", "80", "224"] {
        assert!(expected.contains(&v), "missing {v}");
    }
    assert!(checks.iter().all(|c| c["provenance"] == "formula"));
}

#[test]
fn verify_suites_pass() {
    for (suite, primes) in [
        ("dormant-sum", "5"),
        ("equivalence", "7"),
        ("parity", "5"),
        ("census-vs-formula", "5"),
        ("connection-props", "3,5"),
    ] {
        dormancy()
            .args(["verify", "--suite", suite, "--p", primes])
            .assert()
            .success()
            .stdout(predicate::str::contains(" 0 failed"));
    }
}

#[test]
fn dormant_sum_for_p5_is_five() {
    let dir = tempfile::tempdir().unwrap();
    dormancy()
        .args(["verify", "--suite", "dormant-sum", "--p", "5", "--out"])
        .arg(dir.path())
        .assert()
        .success();
    let csv = fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert!(csv.contains(",pass,5,5,formula"), "{csv}");
}

#[test]
fn bad_prime_is_an_input_error() {
    dormancy()
        .args(["verify", "--suite", "closed-forms", "--p", "9"])
        .assert()
        .code(2);
}

#[test]
fn missing_subcommand() {
    dormancy().assert().code(2);
}
