use std::process::{Command, Output};

use serde_json::Value;

fn peaklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peaklab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn perms(v: &Value) -> Vec<(Vec<u64>, String)> {
    let mut out = Vec::new();
    for block in v["expansion"]["degree-terms"].as_array().unwrap() {
        for t in block["terms"].as_array().unwrap() {
            let p = t["perm"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            out.push((p, t["coeff"].to_string()));
        }
    }
    out.sort();
    out
}

#[test]
fn pi_element_is_the_peak_class() {
    let v = json(&peaklab(&["element", "--basis", "pi", "--n", "3", "--index", "2"]));
    let support: Vec<Vec<u64>> = perms(&v).into_iter().map(|(p, _)| p).collect();
    assert_eq!(support, vec![vec![1, 3, 2], vec![2, 3, 1]]);
}

#[test]
fn tilde_xi_three_is_twice_pi_empty() {
    let v = json(&peaklab(&["element", "--basis", "tilde-xi", "--n", "3", "--coords", "pi"]));
    assert_eq!(v["basis"], "Pi");
    assert_eq!(v["coords"], serde_json::json!({"": "2"}));
}

#[test]
fn gamma_of_degree_one() {
    let v = json(&peaklab(&["element", "--basis", "gamma", "--n", "1", "--index", "", "--coords", "xi"]));
    assert_eq!(v["coords"], serde_json::json!({"1": "1"}));
}

#[test]
fn invalid_index_exits_2_naming_the_constraint() {
    let out = peaklab(&["element", "--basis", "pi", "--n", "3", "--index", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a peak set"));
    let out = peaklab(&["element", "--basis", "xi", "--n", "3", "--index", "2.2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not sum to 3"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(peaklab(&["verify", "main-thm-comb-char", "--n-max", "5"]).status.code(), Some(0));
    let out = peaklab(&["verify", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown check"));
}

#[test]
fn verify_all_small() {
    let out = peaklab(&["verify", "all", "--n-max", "4", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    assert!(v["checks"].as_array().unwrap().len() > 40);
}

#[test]
fn report_values() {
    let dir = std::env::temp_dir().join(format!("peaklab-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = peaklab(&["report", "--n-max", "6", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["fibonacci"], serde_json::json!([1, 1, 2, 3, 5, 8]));
    assert_eq!(v["cartan-5"], serde_json::json!([[1, 0, 0], [1, 1, 0], [0, 0, 1]]));
    assert_eq!(v["nilpotency"]["5"], 2);
    assert_eq!(v["nilpotency"]["6"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cartan_csv() {
    let out = peaklab(&["cartan", "--n", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "q\\p,5,3.1.1,1.1.1.1.1\n5,1,0,0\n3.1.1,1,1,0\n1.1.1.1.1,0,0,1\n");
}

#[test]
fn radical_chain() {
    let v = json(&peaklab(&["radical", "--n", "7", "--format", "json"]));
    assert_eq!(v["radical_chain_dims"], serde_json::json!([8, 2, 0]));
    assert_eq!(v["nilpotency_index"], 3);
}

#[test]
fn peak_dynkin_idempotent() {
    let v = json(&peaklab(&["idempotent", "--kind", "peak-dynkin", "--n", "3", "--format", "json"]));
    assert_eq!(v["pi"], serde_json::json!({"": "1/3", "2": "-2/3"}));
    let out = peaklab(&["idempotent", "--kind", "peak-canonical", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eulerian_table_is_commutative() {
    let v = json(&peaklab(&["eulerian", "--n", "5", "--table", "--format", "json"]));
    let t = v["table"].as_array().unwrap();
    assert_eq!(t.len(), 3);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(t[i][j], t[j][i]);
        }
    }
}

#[test]
fn degree_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_peaklab"))
        .args(["element", "--basis", "xi", "--n", "5"])
        .env("PEAKLAB_DEGREE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("PEAKLAB_DEGREE_CAP"));
}
