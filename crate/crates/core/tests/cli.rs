use std::path::PathBuf;
use std::process::{Command, Output};

use mapblocks::cli::{EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use mapblocks::map::validate;
use mapblocks::RootedMap;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(fixture("golden").join(name)).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mapblocks")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(EXIT_OK), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn column(csv: &str, i: usize) -> Vec<String> {
    csv.lines().skip(1).map(|l| l.split(',').nth(i).unwrap().to_string()).collect()
}

#[test]
fn count_tables() {
    assert_eq!(column(&stdout(&["count", "--maps", "0..5"]), 1), ["1", "2", "9", "54", "378", "2916"]);
    assert_eq!(column(&stdout(&["count", "--blocks", "0..4"]), 1), ["1", "2", "1", "2", "6"]);
    assert_eq!(column(&stdout(&["count", "--maps", "0..0"]), 1), ["1"]);
    let json = stdout(&["count", "--maps", "12..12", "--format", "json"]);
    let v: Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["n"], 12);
    assert_eq!(v["maps"], "15792300756");
}

#[test]
fn malformed_range_is_a_usage_error() {
    for bad in ["5..2", "a..3", "1..x"] {
        assert_eq!(run(&["count", "--maps", bad]).status.code(), Some(EXIT_USAGE), "{bad}");
    }
    assert_eq!(run(&["count"]).status.code(), Some(EXIT_USAGE));
}

#[test]
fn verify_fast_passes() {
    let out = stdout(&["verify", "fast"]);
    assert_eq!(out.lines().next().unwrap(), golden("verify_header.csv").trim_end());
    assert!(out.lines().skip(1).all(|l| l.split(',').nth(1) == Some("PASS")), "{out}");
}

#[test]
fn verify_rejects_corrupted_counts() {
    let path = fixture("two_connected_counts_corrupt.json");
    let out = run(&["verify", "fast", "--two-connected-counts", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_CHECK_FAILED));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("compose_check_24,FAIL")), "{text}");
}

#[test]
fn zero_counts_are_usage_errors() {
    for args in [
        &["sample", "--n", "5", "--count", "0"][..],
        &["sample", "--n", "0", "--count", "3"],
        &["sample", "--n", "5", "--replicas", "0"],
        &["experiment", "--n", "5", "--count", "0"],
        &["experiment", "--n", "50", "--k", "1"],
        &["sample", "--full-map", "--n", "7"],
    ] {
        assert_eq!(run(args).status.code(), Some(EXIT_USAGE), "{args:?}");
    }
}

#[test]
fn sample_is_byte_deterministic() {
    let a = run(&["sample", "--n", "2", "--count", "3", "--seed", "7"]);
    let b = run(&["sample", "--n", "2", "--count", "3", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
    let c = run(&["sample", "--n", "2", "--count", "3", "--seed", "8"]);
    assert_ne!(column(&String::from_utf8(a.stdout).unwrap(), 3), column(&String::from_utf8(c.stdout).unwrap(), 3));
}

#[test]
fn thread_count_does_not_change_output() {
    let base = ["sample", "--n", "20000", "--count", "6", "--replicas", "5", "--seed", "3"];
    let one = run(&[&base[..], &["--threads", "1"]].concat());
    let many = run(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one.status.code(), Some(EXIT_OK));
    assert_eq!(one.stdout, many.stdout);
    let exp = ["experiment", "--n", "3000", "--count", "20", "--replicas", "3", "--seed", "5"];
    let one = run(&[&exp[..], &["--threads", "1"]].concat());
    let many = run(&[&exp[..], &["--threads", "3"]].concat());
    assert_eq!(one.status.code(), Some(EXIT_OK));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn large_sample_rows_sum_to_n() {
    let out = stdout(&["sample", "--n", "100000", "--count", "500", "--replicas", "4"]);
    let mut rows = 0;
    for line in out.lines().skip(1) {
        let f: Vec<usize> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(f[0], 100_000);
        assert_eq!(f[5..].iter().sum::<usize>(), 100_000);
        assert!(f[5..].windows(2).all(|w| w[0] >= w[1]));
        rows += 1;
    }
    assert_eq!(rows, 2000);
}

#[test]
fn golden_sample_schemas() {
    let csv = stdout(&["sample", "--n", "40", "--count", "4", "--top", "3", "--seed", "1"]);
    assert_eq!(format!("{}\n", csv.lines().next().unwrap()), golden("sample_header_top3.csv"));
    let json = stdout(&["sample", "--n", "40", "--count", "4", "--seed", "1", "--format", "json"]);
    let want: Vec<String> = serde_json::from_str(&golden("sample_fields.json")).unwrap();
    for line in json.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, want.iter().collect::<Vec<_>>());
        assert_eq!(v["sizes"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum::<u64>(), 40);
    }
}

#[test]
fn golden_experiment_schemas() {
    let args = ["experiment", "--n", "2000", "--count", "40", "--seed", "2"];
    let csv = stdout(&args);
    assert_eq!(format!("{}\n", csv.lines().next().unwrap()), golden("experiment_header.csv"));
    for test in ["mean_L1_over_n", "ks2_L1_vs_stable", "ks1_L2_theorem", "ks1_L2_proof", "scale_discrimination_ratio"] {
        assert!(csv.lines().any(|l| l.starts_with(&format!("{test},"))), "{test} missing");
    }
    let json = stdout(&[&args[..], &["--format", "json"]].concat());
    let want: Vec<String> = serde_json::from_str(&golden("experiment_fields.json")).unwrap();
    let lines: Vec<Value> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    for v in &lines[..lines.len() - 1] {
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, want.iter().collect::<Vec<_>>());
    }
    assert_eq!(lines.last().unwrap()["test"], "summary");
}

#[test]
fn full_maps_validate() {
    let json = stdout(&["sample", "--full-map", "--n", "3", "--count", "10", "--format", "json"]);
    let lines: Vec<&str> = json.lines().collect();
    assert_eq!(lines.len(), 10);
    for line in lines {
        let v: Value = serde_json::from_str(line).unwrap();
        let m = RootedMap::from_json(&v["map"].to_string()).unwrap();
        assert!(validate(&m).is_empty());
        assert_eq!(m.num_edges(), 3);
    }
    let csv = stdout(&["sample", "--full-map", "--n", "3", "--count", "10"]);
    assert_eq!(csv.lines().count(), 11);
}

#[test]
fn out_flag_and_samples_out_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.csv");
    let raw = dir.path().join("raw.csv");
    let printed = stdout(&["sample", "--n", "10", "--count", "5"]);
    assert!(run(&["sample", "--n", "10", "--count", "5", "--out", out.to_str().unwrap()]).stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), printed);
    stdout(&["experiment", "--n", "500", "--count", "30", "--samples-out", raw.to_str().unwrap()]);
    let raw = std::fs::read_to_string(raw).unwrap();
    assert_eq!(raw.lines().next().unwrap(), "index,L1_rescaled,stable,L2,L2_rescaled");
    assert_eq!(raw.lines().count(), 31);
}

#[test]
fn help_mentions_every_flag() {
    let sample = String::from_utf8(run(&["sample", "--help"]).stdout).unwrap();
    for flag in ["--n", "--count", "--replicas", "--seed", "--format", "--out", "--full-map", "--threads", "--top"] {
        assert!(sample.contains(flag), "{flag}");
    }
    let exp = String::from_utf8(run(&["experiment", "--help"]).stdout).unwrap();
    for flag in ["--scale", "--k", "--samples-out"] {
        assert!(exp.contains(flag), "{flag}");
    }
}
