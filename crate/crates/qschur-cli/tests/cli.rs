use std::process::{Command, Output};

use serde_json::{json, Value};

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur")).args(args).output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = qschur(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    qschur(args).status.code().unwrap()
}

#[test]
fn dims_small() {
    assert_eq!(ok_json(&["dims", "--n", "2", "--r", "1"]), json!({"count": 8, "rank": 8}));
}

#[test]
fn verify_qq_passes() {
    let reps = ok_json(&["verify-qq", "--n", "2", "--r", "2"]);
    let reps = reps.as_array().unwrap();
    assert!(!reps.is_empty());
    assert!(reps.iter().all(|r| r["status"] == "pass"), "{reps:?}");
}

#[test]
fn hc_mul_square_of_t1() {
    let t1 = r#"{"r":2,"terms":[{"w":[2,1],"alpha":[0,0],"coeff":{"num":{"0":"1"},"den":{"0":"1"}}}]}"#;
    let out = qschur(&["hc-mul", "--r", "2", "--left", t1, "--right", t1]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    // T1² = v² + (v² − 1) T1
    let v2 = json!({"num": {"2": "1"}, "den": {"0": "1"}});
    let v2m1 = json!({"num": {"0": "-1", "2": "1"}, "den": {"0": "1"}});
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2, "{v}");
    assert!(terms.iter().any(|t| t["w"] == json!([1, 2]) && t["coeff"] == v2), "{v}");
    assert!(terms.iter().any(|t| t["w"] == json!([2, 1]) && t["coeff"] == v2m1), "{v}");
}

#[test]
fn hc_mul_relation_suite() {
    let reps = ok_json(&["hc-mul", "--r", "2", "--seed", "3"]);
    assert!(reps.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn long_eval_round_trips_through_gen_mul() {
    let a = r#"{"even":[[0,0],[0,0]],"odd":[[0,0],[0,0]]}"#;
    let x = ok_json(&["long-eval", "--matrix", a, "--j", "[0,0]", "--r", "1"]);
    assert!(x.is_object(), "{x}");
    let one = json!({"num": {"0": "1"}, "den": {"0": "1"}});
    let long = json!({"n": 2, "terms": [{"matrix": serde_json::from_str::<Value>(a).unwrap(), "j": [0, 0], "coeff": one}]});
    let long = long.to_string();
    let eval = ok_json(&["gen-mul", "--left", "G1", "--right", &long]);
    let closed = ok_json(&["gen-mul", "--left", "G1", "--right", &long, "--closed"]);
    assert_eq!(eval, closed);
}

#[test]
fn out_file_and_at_path() {
    let dir = std::env::temp_dir().join(format!("qschur-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let m = dir.join("m.json");
    std::fs::write(&m, r#"{"even":[[0,1],[0,0]],"odd":[[0,0],[0,0]]}"#).unwrap();
    let o = dir.join("out.json");
    let arg = format!("@{}", m.display());
    let out = qschur(&["--out", o.to_str().unwrap(), "sdp", "--matrix", &arg, "--row", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&o).unwrap()).unwrap();
    assert!(v["sdp"].is_boolean());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["dims"]), 2);
    assert_eq!(code(&["long-eval", "--matrix", "{not json", "--j", "[0]", "--r", "1"]), 2);
    let a = r#"{"even":[[0,0],[0,0]],"odd":[[0,0],[0,0]]}"#;
    assert_eq!(code(&["long-eval", "--matrix", a, "--j", "[0,0,0]", "--r", "1"]), 2);
    assert_eq!(code(&["hc-mul", "--r", "2", "--left", "{}"]), 2);
    assert_eq!(code(&["gen-mul", "--left", "Q7", "--right", "{}"]), 2);
    // triangularity fails for this monomial at n = 3
    let e21 = r#"{"even":[[0,0,0],[0,0,0],[0,0,0]],"odd":[[0,0,0],[1,0,0],[0,0,0]]}"#;
    assert_eq!(code(&["triangular", "--r", "3", "--matrix", e21]), 1);
    let e12 = r#"{"even":[[0,1],[0,0]],"odd":[[0,0],[0,0]]}"#;
    assert_eq!(code(&["triangular", "--r", "3", "--matrix", e12]), 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["hc-mul", "--r", "3", "--seed", "11"];
    assert_eq!(qschur(&args).stdout, qschur(&args).stdout);
}
