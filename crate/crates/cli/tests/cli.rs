use std::path::PathBuf;
use std::process::{Command, Output};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn catalog(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "catalog", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn verify_single_check_json() {
    let o = hecke(&["verify", "eq51", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    assert_eq!(v["checks"][0]["check"], "eq51");
    assert_eq!(v["checks"][0]["status"], "pass");
    assert_eq!(v["q"], 5);
}

#[test]
fn verify_all_exit_code_tracks_failures() {
    let o = hecke(&["verify", "all", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["status"] == "fail");
    assert_eq!(o.status.success(), !failed);
}

#[test]
fn prop52_verdict() {
    let o = hecke(&["prop52", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "not congruence");
    let premise: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "premise")
        .collect();
    assert_eq!(premise.len(), 1);
}

#[test]
fn unknown_check_is_an_error() {
    let o = hecke(&["explain", "nosuch"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("nosuch"));
    assert!(!hecke(&["verify", "nosuch"]).status.success());
}

#[test]
fn explain_lemma_a1_lists_scan() {
    let o = hecke(&["explain", "lemma-a1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("\"candidates\": 64"), "{text}");
}

#[test]
fn hfs_invariants_of_pentagon() {
    let o = hecke(&["hfs", "invariants", &catalog("g5_power5.hfs"), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariants"]["d"], 5);
    assert_eq!(v["invariants"]["v2"], 5);
    assert_eq!(v["cusps"]["geometric_width"], 5);
}

#[test]
fn hfs_rejects_bad_symbol() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.hfs");
    std::fs::write(&path, "q=5;\nvertices=-oo,0,1,oo;\npairings=even,odd;\n").unwrap();
    let o = hecke(&["hfs", "validate", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(hecke(&["hfs", "validate", &catalog("gamma2_q3.hfs")])
        .status
        .success());
}

#[test]
fn hfs_generators_json() {
    let o = hecke(&["hfs", "generators", &catalog("gamma2_q3.hfs"), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let gens = v.as_array().unwrap();
    assert_eq!(gens.len(), 2);
    assert!(gens.iter().all(|g| g["kind"] == "free"));
}

#[test]
fn fp_index_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let xy = dir.path().join("xy.txt");
    std::fs::write(&xy, "y\nxyx\n").unwrap();
    let o = hecke(&["fp", "index", "--subgroup-words", xy.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "2");

    let st = dir.path().join("st.txt");
    std::fs::write(
        &st,
        "# the five involutions of the pentagon\nS\nStSTS\nTSTStSt\nStSttStSt\nTSt\n",
    )
    .unwrap();
    let o = hecke(&[
        "fp",
        "index",
        "--subgroup-words",
        st.to_str().unwrap(),
        "--q",
        "5",
    ]);
    assert_eq!(stdout(&o).trim(), "5");
}

#[test]
fn fp_low_index_json() {
    let o = hecke(&["fp", "low-index", "--max", "5", "--q", "5", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let idx: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["index"].as_u64().unwrap())
        .collect();
    assert!(!idx.contains(&3) && !idx.contains(&4));
    assert!(hecke(&["fp", "low-index", "--max", "40"]).status.code() == Some(2));
}

#[test]
fn quotient_order() {
    let o = hecke(&["quotient", "order", "--modulus", "2+1L"]);
    assert!(stdout(&o).contains("order: 60"));
}

#[test]
fn decompose_matrix() {
    let o = hecke(&["decompose", "--matrix", "[[0+1L,-2-1L],[1,0-1L]]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "TSt");
    let o = hecke(&["decompose", "--matrix", "[[1,2],[0,1]]"]);
    assert!(!o.status.success());
}
