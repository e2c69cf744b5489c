//! End-to-end runs of the `halfplane` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn halfplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halfplane")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("halfplane-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn catalog_listing_and_entries() {
    let out = halfplane(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let names: Vec<&str> = v["names"].as_array().unwrap().iter().map(|n| n.as_str().unwrap()).collect();
    assert!(names.contains(&"F7") && names.contains(&"V8"));
    assert!(v["families"].as_array().unwrap().iter().any(|f| f == "U_{r,n}"));

    let f7 = json(&halfplane(&["catalog", "F7"]));
    assert_eq!(f7["bases"].as_array().unwrap().len(), 28);
    assert_eq!(f7["rank"], 3);

    let missing = halfplane(&["catalog", "NoSuch"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("NoSuch"));
}

#[test]
fn hpp_exit_codes() {
    let f7 = halfplane(&["hpp", "F7", "--method", "rays", "--trials", "100000", "--seed", "1"]);
    assert_eq!(f7.status.code(), Some(2));
    let report = json(&f7);
    assert_eq!(report["verdict"], "counterexample");
    assert!(report["certificate"].is_object());

    for name in ["U_{3,6}", "V8"] {
        let out = halfplane(&["hpp", name, "--method", "rays", "--trials", "20000"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(json(&out)["counterexamples"], 0);
    }

    let rank2 = halfplane(&["hpp", "U_{2,4}", "--method", "rank2"]);
    assert_eq!(rank2.status.code(), Some(0));
    assert_eq!(json(&rank2)["hpp"], true);
}

#[test]
fn hpp_is_deterministic_for_a_seed() {
    let args = ["hpp", "F7m", "--method", "elementary", "--trials", "20000", "--seed", "9"];
    assert_eq!(halfplane(&args).stdout, halfplane(&args).stdout);
}

#[test]
fn reproduce_fixtures() {
    let out = halfplane(&["reproduce", "ex11.1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["name"], "ex11.1");
    assert_eq!(v[0]["pass"], true);

    let window = json(&halfplane(&["reproduce", "ex11.7", "--eps", "0.3"]));
    assert_eq!(window[0]["pass"], true);

    let pretty = halfplane(&["reproduce", "ex11.4", "--eps", "0", "--pretty"]);
    assert_eq!(pretty.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&pretty.stdout).starts_with("ex11.4   PASS"));

    assert_eq!(halfplane(&["reproduce", "ex99"]).status.code(), Some(1));
}

#[test]
fn niceness_commands() {
    let k4 = json(&halfplane(&["nice", "MK4", "--flat", "0,1,2"]));
    assert_eq!(k4["status"], "nice");
    assert_eq!(k4["weights"][0], "1/2");

    let q7 = json(&halfplane(&["nice", "Q7del7", "--flat", "all"]));
    assert_eq!(q7["status"], "infeasible_nonneg");
    assert_eq!(q7["weights"][0], "-1/6");

    let pres = temp_file("W3.json", r#"{"n": 6, "sets": [[3, 4, 5], [0, 1, 5], [1, 2, 3]]}"#);
    let w3 = json(&halfplane(&["nice", "--transversal", pres.to_str().unwrap(), "--weights", "ones"]));
    assert_eq!(w3["uniform"], false);

    assert_eq!(halfplane(&["nice", "MK4"]).status.code(), Some(1));
}

#[test]
fn construct_pipelines() {
    let e13 = json(&halfplane(&["construct", "basis U_{2,3} | dual"]));
    assert_eq!(e13["n"], 3);
    let subsets: Vec<&Value> = e13["terms"].as_array().unwrap().iter().map(|t| &t["subset"]).collect();
    assert_eq!(subsets.len(), 3);
    assert!(subsets.iter().all(|s| s.as_array().unwrap().len() == 1));

    let relaxed = json(&halfplane(&["construct", "basis F7 | relax 1,3,5"]));
    let non_fano = json(&halfplane(&["construct", "basis F7m"]));
    assert_eq!(relaxed, non_fano);

    let matrix = temp_file("A.json", r#"{"rows": 2, "cols": 3, "entries": [[1, 0, 1], [0, 1, 1]]}"#);
    let script = format!("detpoly {} | support", matrix.display());
    let support = json(&halfplane(&["construct", &script]));
    assert_eq!(support["n"], 3);
    assert_eq!(support["bases"].as_array().unwrap().len(), 3);

    let bad = halfplane(&["construct", "basis F7 | delete 9"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("step 2"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(halfplane(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(halfplane(&["hpp"]).status.code(), Some(1));
    assert_eq!(halfplane(&["hpp", "F7", "--tol-im", "-1"]).status.code(), Some(1));
    assert_eq!(halfplane(&["--help"]).status.code(), Some(0));
}
