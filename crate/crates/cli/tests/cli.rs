use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circulant-trees"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn csv(args: &[&str]) -> Vec<Vec<String>> {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn count_digraph() {
    let v = json(&["count", "--digraph", "3,2,3,2"]);
    assert_eq!(v["count"], "84");
    assert_eq!(v["method"], "theorem1");
    assert_eq!(v["certified"], true);
    assert_eq!(v["spec"]["family"], "digraph");
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn count_cycle_power() {
    let v = json(&["count", "--cycle-power", "2,2,n"]);
    assert_eq!(v["count"], "36");
    assert_eq!(v["method"], "cycle-power");
    let v = json(&["count", "--cycle-power", "3,2,n", "--method", "matrix-tree"]);
    assert_eq!(v["count"], "384");
}

#[test]
fn count_structural_zero_has_reason() {
    let v = json(&["count", "--digraph", "3,3,3,2"]);
    assert_eq!(v["count"], "0");
    assert_eq!(v["reason"], "gcd(p,n)!=1");
    assert_eq!(v["bits_used"], 0);
}

#[test]
fn count_timing_is_opt_in() {
    let v = json(&["count", "--digraph", "3,2,3,2", "--timing"]);
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn compare_digraph_all_methods() {
    let v = json(&["compare", "--digraph", "6,1,2,5"]);
    assert_eq!(v["agree"], true);
    let methods: Vec<&str> = v["methods"].as_array().unwrap().iter().map(|m| m["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["theorem1", "theorem2", "betaproduct", "matrix-tree", "eigenproduct"]);
    for m in v["methods"].as_array().unwrap() {
        assert_eq!(m["count"], "126");
    }
}

#[test]
fn compare_cycle_power_and_all_even() {
    let v = json(&["compare", "--cycle-power", "3,1,n"]);
    assert_eq!(v["agree"], true);
    assert!(v["methods"].as_array().unwrap().iter().all(|m| m["count"] == "3"));
    let v = json(&["compare", "--digraph", "2,1,2,2"]);
    assert_eq!(v["agree"], true);
    assert!(v["methods"].as_array().unwrap().iter().all(|m| m["count"] == "0"));
}

#[test]
fn invalid_specs_exit_two() {
    for args in [
        &["count", "--digraph", "3,2,3"][..],
        &["count", "--digraph", "3,2,3,7"],
        &["count", "--cycle-power", "3,1,n-1"],
        &["count", "--cycle-power", "3,2,n", "--method", "theorem1"],
        &["count", "--digraph", "3,2,3,2", "--cycle-power", "3,2,n"],
        &["count"],
        &["count", "--digraph", "3,2,3,2", "--bits-start", "64", "--bits-cap", "32"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn oracle_guard() {
    let out = run(&["count", "--digraph", "5,401,1,1", "--method", "matrix-tree"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2000"));
    let out = run(&["count", "--cycle-power", "5,401,n", "--method", "eigenproduct"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn precision_exhaustion_exits_three() {
    let out = run(&["count", "--digraph", "5,9,1,1,3", "--bits-start", "16", "--bits-cap", "16"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(out.stdout.is_empty());
}

#[test]
fn sweep_digraph_family() {
    let rows = csv(&["sweep", "--digraph-family", "3,n,3,2", "--n", "1..6"]);
    assert_eq!(rows[0], ["beta", "n", "p", "gammas", "count", "reason"]);
    let counts: Vec<&str> = rows[1..].iter().map(|r| r[4].as_str()).collect();
    assert_eq!(counts, ["3", "84", "0", "8736", "79440", "0"]);
    assert_eq!(rows[3].join(","), "3,3,3,2,0,\"gcd(p,n)!=1\"");
    let oracle = csv(&["sweep", "--digraph-family", "3,n,3,2", "--n", "1..6", "--method", "matrix-tree"]);
    let oracle_counts: Vec<&str> = oracle[1..].iter().map(|r| r[4].as_str()).collect();
    assert_eq!(counts, oracle_counts);
}

#[test]
fn sweep_cycle_power_family_with_timing() {
    let rows = csv(&["sweep", "--cycle-power-family", "2,n,n-1", "--n", "2,3,4", "--timing"]);
    assert_eq!(rows[0], ["beta", "n", "power", "count", "elapsed_ms"]);
    assert_eq!(rows[1][3], "4");
    assert_eq!(rows.len(), 4);
}

#[test]
fn converge_beta_two_matches_compound_interest() {
    let rows = csv(&["converge", "--cycle-power-family", "2,n", "--n", "1..5"]);
    assert_eq!(rows[0], ["n", "ratio", "target", "relative_error"]);
    for row in &rows[1..] {
        let n: f64 = row[0].parse().unwrap();
        let ratio: f64 = row[1].parse().unwrap();
        let target: f64 = row[2].parse().unwrap();
        let err: f64 = row[3].parse().unwrap();
        let expected = (1.0 + 1.0 / n).powf(n);
        assert!((ratio - expected).abs() < 1e-12);
        assert!((target - std::f64::consts::E).abs() < 1e-12);
        assert!((err - (expected / std::f64::consts::E - 1.0).abs()).abs() < 1e-12);
    }
}

#[test]
fn converge_columns_for_beta_three() {
    // the error column is |ratio/target − 1|; it is not monotone in n for β = 3
    let rows = csv(&["converge", "--cycle-power-family", "3,n", "--n", "50,100,200"]);
    assert_eq!(rows.len(), 4);
    let ns: Vec<&str> = rows[1..].iter().map(|r| r[0].as_str()).collect();
    assert_eq!(ns, ["50", "100", "200"]);
    for row in &rows[1..] {
        let ratio: f64 = row[1].parse().unwrap();
        let target: f64 = row[2].parse().unwrap();
        let err: f64 = row[3].parse().unwrap();
        assert!((target - 1.5f64.exp()).abs() < 1e-12);
        assert!((err - (ratio / target - 1.0).abs()).abs() < 1e-9);
    }
}

#[test]
fn converge_needs_free_n() {
    let out = run(&["converge", "--cycle-power-family", "3,5,n", "--n", "1..3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["count", "--digraph", "4,5,1,1,3"][..],
        &["compare", "--cycle-power", "4,3,n-1"],
        &["sweep", "--digraph-family", "4,n,1,3", "--n", "1..8"],
        &["converge", "--cycle-power-family", "3,n,n-1", "--n", "2,4,8"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
