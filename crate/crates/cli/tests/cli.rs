use std::process::{Command, Output};

use serde_json::Value;

fn dchain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dchain"))
        .args(args)
        .env_remove("DCHAIN_THREADS")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn enum_lists_four_structures() {
    let out = dchain(&["enum", "--period", "3", "--shift", "1", "--bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 4);
    let s = v["structures"].as_array().unwrap();
    assert_eq!(s.len(), 4);
    for e in s {
        assert_eq!(e["flip_chain"]["flips"].as_array().unwrap().len(), 3);
    }
    assert_eq!(s[1]["diagram"], serde_json::json!([1, 2]));
}

#[test]
fn verify_even_example_passes() {
    let out = dchain(&["verify", "--period", "4", "--case", "3,1", "--params", "1,1", "--alpha", "1/3,2/5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["chains"].as_array().unwrap().len(), 2);
    assert_eq!(v["chains"][0]["alpha"], "1/3");
    let pv = v["painleve"].as_array().unwrap();
    assert_eq!(pv.len(), 2);
    assert_eq!(pv[0]["report"]["equation"], "PV");
    assert_eq!(pv[0]["report"]["residual_zero"], true);
    assert_eq!(pv[0]["report"]["params"]["d"], "-1/2");
}

#[test]
fn verify_odd_includes_piv() {
    let out = dchain(&["verify", "--period", "3", "--shift", "1", "--params", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let eqs = v["chains"][0]["report"]["equations"].as_array().unwrap();
    assert_eq!(eqs.len(), 3);
    assert!(eqs.iter().all(|e| e["match"] == true));
    assert_eq!(v["painleve"][0]["report"]["equation"], "PIV");
}

#[test]
fn painleve_families() {
    let out = dchain(&["painleve", "--period", "3", "--shift", "3", "--params", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["coincides_with_gh"], true);
    let e = v["entries"].as_array().unwrap();
    assert_eq!(e.len(), 3);
    let zero = e.iter().find(|m| m["first_flip"] == 0).unwrap();
    assert_eq!(zero["report"]["params"]["a"], "2/1");
    assert_eq!(zero["report"]["params"]["b"], "-2/9");
    assert_eq!(zero["report"]["params"]["c_sq"], "1/3");

    let out = dchain(&["painleve", "--period", "4", "--case", "2,2", "--params", "1,0", "--alpha", "2/5"]);
    assert_eq!(out.status.code(), Some(0));
    let params = &json(&out)["entries"][0]["report"]["params"];
    assert_eq!(params["a"], "9/8");
    assert_eq!(params["b"], "-1/8");
    assert_eq!(params["c"], "24/5");
    assert_eq!(params["d"], "-2/1");
}

#[test]
fn painleve_rejects_other_periods() {
    let out = dchain(&["painleve", "--period", "5", "--shift", "1", "--params", "1,1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "WrongPeriod");
}

#[test]
fn build_even_per_alpha() {
    let out = dchain(&["build", "--period", "2", "--alpha", "1/3,5/7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 2);
    assert_eq!(sols[1]["alpha"], "5/7");
    assert_eq!(sols[0]["terms"][0]["variable"], "z=x^2");
}

#[test]
fn invalid_input_exits_two() {
    let cases: &[(&[&str], &str)] = &[
        (&["verify", "--period", "3", "--params", "1,2"], "Parse"),
        (&["verify", "--period", "4", "--case", "3,1", "--params", "1,1", "--alpha", "2"], "IntegerAlpha"),
        (&["verify", "--period", "4", "--case", "3,2", "--params", "1,1"], "Parse"),
        (&["verify", "--period", "3", "--shift", "2", "--params", "1,1"], "InvalidParity"),
        (&["verify", "--period", "3", "--shift", "1", "--params", "1"], "InvalidStructure"),
        (&["verify", "--period", "3", "--shift", "1", "--params", "1,2", "--perm", "0,0,1"], "InvalidPermutation"),
        (&["build", "--period", "3", "--shift", "1", "--params", "x,2"], "Parse"),
        (&["enum"], "Usage"),
        (&["frobnicate"], "Usage"),
        (&["selftest", "--criterion", "99"], "Parse"),
    ];
    for (args, kind) in cases {
        let out = dchain(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert_eq!(error_kind(&out), *kind, "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let out = dchain(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--period", "4", "--case", "2,2", "--params", "1,2"];
    let a = dchain(&args);
    let b = dchain(&args);
    assert_eq!(a.stdout, b.stdout);
    let threaded = Command::new(env!("CARGO_BIN_EXE_dchain"))
        .args(args)
        .env("DCHAIN_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(threaded.status.code(), Some(0));
    assert_eq!(a.stdout, threaded.stdout);
}

#[test]
fn json_is_stable_under_reparse() {
    for args in [
        &["build", "--period", "3", "--shift", "1", "--params", "2,1"][..],
        &["verify", "--period", "4", "--case", "3,1", "--params", "1,1", "--alpha", "1/3,2/5"][..],
        &["enum", "--period", "5", "--shift", "3", "--bound", "1"][..],
    ] {
        let out = dchain(args);
        let v: Value = json(&out);
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again);
        assert!(out.stdout.ends_with(b"}\n"));
    }
}

#[test]
fn writes_out_file() {
    let path = std::env::temp_dir().join(format!("dchain-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = dchain(&["enum", "--period", "3", "--shift", "1", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], 4);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn text_and_latex_formats() {
    let out = dchain(&["painleve", "--period", "3", "--shift", "1", "--params", "1,2", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("a = 3,\\ b = -8"));
    let out = dchain(&["enum", "--period", "3", "--shift", "1", "--format", "text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("period 3 shift 1 bound 2: 4 structures"));
    let out = dchain(&["build", "--period", "3", "--shift", "1", "--params", "1,2", "--format", "latex"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("\\mathcal{H}^{\\left(1,2\\right)}(z) = 4 z^{2} + 2\n"));
    assert!(s.contains("\\mathcal{H}^{\\left(0,2,3\\right)}(z)"));
    let out = dchain(&["enum", "--period", "5", "--shift", "3", "--bound", "1", "--format", "latex"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("\\left(1\\mid 1\\right)_{3}"));
}

#[test]
fn threads_env_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_dchain"))
        .args(["enum", "--period", "1"])
        .env("DCHAIN_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_single_criterion() {
    let out = dchain(&["selftest", "--criterion", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"][0]["id"], "1");
}
