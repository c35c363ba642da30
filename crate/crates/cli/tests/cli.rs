use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn tangle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tangle"))
        .args(args)
        .output()
        .expect("run tangle")
}

fn body(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).expect("json on stdout");
    assert_eq!(v["version"], 1);
    v["body"].clone()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn straight_base_is_trivial() {
    let out = tangle(&["detect", "--base", "straight"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(body(&out)["verdict"]["reason"], "StraightArcs");
}

#[test]
fn documented_word_is_trivial() {
    let out = tangle(&["detect", "--base", "straight", "--word", "H1^3 * D3 * (D1*D2^-1)^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(body(&out)["verdict"]["verdict"], "Trivial");
}

#[test]
fn mismatch_case_file() {
    let out = tangle(&["detect", "--system", &fixture("mismatch_pairing.case")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(body(&out)["verdict"]["reason"], "PairingMismatch");
}

#[test]
fn clasp_is_not_trivial() {
    let out = tangle(&["detect", "--word", "D1^2", "--trace", "full"]);
    assert_eq!(out.status.code(), Some(1));
    let b = body(&out);
    assert_eq!(b["verdict"]["reason"], "DenseNotStraight");
    assert!(b["trace"].as_array().unwrap().len() >= 3);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(tangle(&["detect", "--word", "H4"]).status.code(), Some(2));
    assert_eq!(
        tangle(&["detect", "--system", "/nonexistent.case"]).status.code(),
        Some(2)
    );
    assert_eq!(tangle(&["detect", "--max-steps", "0"]).status.code(), Some(2));
    assert_eq!(tangle(&["coords", "--params", "1,2,3"]).status.code(), Some(2));
}

#[test]
fn small_budget_exits_3() {
    let out = tangle(&["detect", "--word", "D3^3*(D1*D2^-1)^2", "--max-steps", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn corpus_is_byte_identical() {
    let a = tangle(&["generate-corpus", "--seed", "1", "--count", "10"]);
    let b = tangle(&["generate-corpus", "--seed", "1", "--count", "10"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let cases = body(&a);
    assert_eq!(cases.as_array().unwrap().len(), 10);
    for c in cases.as_array().unwrap() {
        assert!(c["expected"].is_object() && c["provenance"].is_string());
    }
}

#[test]
fn corpus_files_pass_the_oracle_check() {
    let dir = std::env::temp_dir().join(format!("tangle-corpus-{}", std::process::id()));
    let out = tangle(&[
        "generate-corpus",
        "--seed",
        "5",
        "--count",
        "8",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let case: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let want = if case["body"]["expected"]["verdict"] == "Trivial" {
            0
        } else {
            1
        };
        let out = tangle(&["oracle-check", "--system", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(want), "{}", path.display());
        assert_eq!(body(&out)["agree"], true);
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn coords_round_trip_through_a_file() {
    let params = "2,1,-3,1,0,2,3,2,1";
    let out = tangle(&["coords", "--params", params]);
    assert_eq!(out.status.code(), Some(0));
    let path = std::env::temp_dir().join(format!("tangle-coords-{}.json", std::process::id()));
    std::fs::write(&path, &out.stdout).unwrap();
    let back = tangle(&["coords", "--system", path.to_str().unwrap()]);
    let got: Vec<i64> = body(&back)["params"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(got, vec![2, 1, -3, 1, 0, 2, 3, 2, 1]);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn trace_file_is_written() {
    let path = std::env::temp_dir().join(format!("tangle-trace-{}.json", std::process::id()));
    let out = tangle(&[
        "detect",
        "--word",
        "D3",
        "--trace",
        "none",
        "--trace-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let trace: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(trace["schema"], "trace");
    assert!(body(&out).get("trace").is_none());
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn stages_run() {
    for cmd in ["reduce", "make-dense", "standardize", "twist"] {
        let out = tangle(&[cmd, "--word", "D3*(D1*D2^-1)^-1*H2"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        assert!(body(&out).is_object());
    }
}
