use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use qha_cli::schema::{parse_str, to_json};

fn qha(dir: &Path, args: &[&str]) -> (i32, String, String) {
    qha_env(dir, args, None)
}

fn qha_env(dir: &Path, args: &[&str], cap: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qha"));
    cmd.current_dir(dir).args(args).env_remove("QHA_MAX_DIM");
    if let Some(c) = cap {
        cmd.env("QHA_MAX_DIM", c);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn error_code(stderr: &str) -> String {
    let v: Value = serde_json::from_str(stderr.trim()).unwrap();
    v["error"]["code"].as_str().unwrap().to_string()
}

/// kC2, A = k and M = k over the given field.
fn kc2_inputs(field: &str) -> TempDir {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert_eq!(qha(d, &["generate", "group-algebra", "--order", "2", "--field", field, "--out", "kC2.json"]).0, 0);
    assert_eq!(qha(d, &["generate", "unit-algebra", "--structure", "kC2.json", "--out", "unitA.json"]).0, 0);
    assert_eq!(qha(d, &["generate", "unit-coefficient", "--structure", "kC2.json", "--out", "trivialM.json"]).0, 0);
    dir
}

fn report(stdout: &str) -> Value {
    serde_json::from_str(stdout).unwrap()
}

#[test]
fn check_group_algebra_passes() {
    let dir = kc2_inputs("Q");
    let (code, out, _) = qha(dir.path(), &["check", "kC2.json"]);
    assert_eq!(code, 0);
    let r = report(&out);
    assert_eq!(r["passed"], true);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn non_cocycle_fails_with_exit_one() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    qha(d, &["generate", "twisted-dual", "--omega", "non-cocycle", "--out", "bad.json"]);
    let (code, out, _) = qha(d, &["check", "bad.json"]);
    assert_eq!(code, 1);
    let failed: Vec<String> = report(&out)["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, vec!["pentagon".to_string()]);
}

#[test]
fn cohomology_of_the_unit() {
    for field in ["Q", "GF5"] {
        let dir = kc2_inputs(field);
        let args = ["cohomology", "kC2.json", "unitA.json", "trivialM.json", "--degree", "4", "--theory", "cyclic"];
        let (code, out, _) = qha(dir.path(), &args);
        assert_eq!(code, 0);
        assert_eq!(report(&out)["cohomology"]["dims"], serde_json::json!([1, 0, 1, 0, 1]));
        let args = ["cohomology", "kC2.json", "unitA.json", "trivialM.json", "--degree", "3", "--theory", "hochschild"];
        let (code, out, _) = qha(dir.path(), &args);
        assert_eq!(code, 0);
        assert_eq!(report(&out)["cohomology"]["dims"], serde_json::json!([1, 0, 0, 0]));
    }
}

#[test]
fn dimension_cap_is_enforced() {
    let dir = kc2_inputs("Q");
    let d = dir.path();
    qha(d, &["generate", "unit-coefficient", "--structure", "kC2.json", "--out", "m.json"]);
    std::fs::write(d.join("fun.json"), FUNCTIONS_ON_C2).unwrap();
    let args = ["cohomology", "kC2.json", "fun.json", "m.json", "--degree", "3"];
    let (code, _, err) = qha_env(d, &args, Some("8"));
    assert_eq!(code, 2);
    assert_eq!(error_code(&err), "E_TOO_LARGE");
    let (code, _, _) = qha_env(d, &args, None);
    assert_eq!(code, 0);
}

const FUNCTIONS_ON_C2: &str = r#"{
  "kind": "module_algebra", "name": "k^C2", "field": {"type": "Q"},
  "carrier": {"dim": 2, "action": [[["1","0"],["0","1"]], [["0","1"],["1","0"]]]},
  "mult": [["1","0","0","0"], ["0","0","0","1"]],
  "unit": [["1"], ["1"]]
}"#;

#[test]
fn convert_roundtrip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    qha(d, &["generate", "twisted-dual", "--out", "td.json"]);
    qha(d, &["generate", "unit-coefficient", "--structure", "td.json", "--flavor", "type_i", "--out", "c1.json"]);
    assert_eq!(qha(d, &["convert", "td.json", "c1.json", "--to", "typeII", "--out", "c2.json"]).0, 0);
    assert_eq!(qha(d, &["convert", "td.json", "c2.json", "--to", "typeI", "--out", "c3.json"]).0, 0);
    let read = |p: &str| -> Value { serde_json::from_str(&std::fs::read_to_string(d.join(p)).unwrap()).unwrap() };
    let (a, b) = (read("c1.json"), read("c3.json"));
    assert_eq!(
        serde_json::to_vec(&a["contraaction"]).unwrap(),
        serde_json::to_vec(&b["contraaction"]).unwrap()
    );
    assert_eq!(read("c2.json")["flavor"], "type_ii");
}

#[test]
fn reports_are_deterministic() {
    let dir = kc2_inputs("GF5");
    let args = ["stability", "kC2.json", "trivialM.json", "--reproducible"];
    let first = qha(dir.path(), &args);
    let second = qha(dir.path(), &args);
    assert_eq!(first, second);
    assert!(!first.1.contains("timing_ms"));
    let timed = qha(dir.path(), &["stability", "kC2.json", "trivialM.json"]);
    assert!(timed.1.contains("timing_ms"));
}

#[test]
fn pretty_output_is_text() {
    let dir = kc2_inputs("Q");
    let (code, out, _) = qha(dir.path(), &["ayd", "kC2.json", "trivialM.json", "--pretty"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ayd: PASS"));
    assert!(out.contains("ok   ayd"));
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn parse_errors_have_distinct_codes() {
    let dir = kc2_inputs("Q");
    let d = dir.path();
    let good: Value = serde_json::from_str(&std::fs::read_to_string(d.join("kC2.json")).unwrap()).unwrap();

    write(d, "p4.json", r#"{"kind":"quasi_hopf","name":"x","field":{"type":"GFp","p":4}}"#);
    let (code, _, err) = qha(d, &["check", "p4.json"]);
    assert_eq!((code, error_code(&err)), (2, "E_NONPRIME".to_string()));
    assert!(err.contains("non-prime characteristic"));

    let mut short = good.clone();
    short["mult"].as_array_mut().unwrap().pop();
    write(d, "short.json", &short.to_string());
    let (code, _, err) = qha(d, &["check", "short.json"]);
    assert_eq!((code, error_code(&err)), (2, "E_DIMENSION".to_string()));
    assert!(err.contains("\\\"mult\\\""));

    let mut scalar = good.clone();
    scalar["unit"][0] = Value::String("one".into());
    write(d, "scalar.json", &scalar.to_string());
    let (code, _, err) = qha(d, &["check", "scalar.json"]);
    assert_eq!((code, error_code(&err)), (2, "E_SCALAR".to_string()));
    assert!(err.contains("/unit/0"));

    write(d, "broken.json", "{\"kind\": ");
    assert_eq!(error_code(&qha(d, &["check", "broken.json"]).2), "E_JSON");

    let mut nokind = good.clone();
    nokind.as_object_mut().unwrap().remove("kind");
    write(d, "nokind.json", &nokind.to_string());
    assert_eq!(error_code(&qha(d, &["check", "nokind.json"]).2), "E_SCHEMA");

    assert_eq!(error_code(&qha(d, &["check", "missing.json"]).2), "E_IO");
}

#[test]
fn incompatible_kinds_are_usage_errors() {
    let dir = kc2_inputs("Q");
    let d = dir.path();
    qha(d, &["generate", "enveloping-algebroid", "--out", "env.json"]);
    qha(d, &["generate", "enveloping-dual-coefficient", "--structure", "env.json", "--out", "dual.json"]);
    let (code, _, err) = qha(d, &["ayd", "kC2.json", "dual.json"]);
    assert_eq!((code, error_code(&err)), (2, "E_USAGE".to_string()));
    let (code, _, err) = qha(d, &["ayd", "env.json", "trivialM.json"]);
    assert_eq!((code, error_code(&err)), (2, "E_USAGE".to_string()));
    assert_eq!(qha(d, &["ayd", "env.json", "dual.json"]).0, 0);
    assert_eq!(qha(d, &["stability", "env.json", "dual.json"]).0, 0);
    assert_eq!(qha(d, &["bogus"]).0, 2);
}

#[test]
fn documents_roundtrip_through_json() {
    let dir = kc2_inputs("GF5");
    let d = dir.path();
    qha(d, &["generate", "enveloping-algebroid", "--field", "GF5", "--out", "env.json"]);
    qha(d, &["generate", "sweedler-h4", "--field", "GF5", "--out", "h4.json"]);
    for name in ["kC2.json", "unitA.json", "trivialM.json", "env.json", "h4.json"] {
        let text = std::fs::read_to_string(d.join(name)).unwrap();
        let doc = parse_str(&text).unwrap();
        let again = to_json(&doc);
        assert_eq!(text, again, "{name}");
        assert_eq!(parse_str(&again).unwrap(), doc);
    }
}

#[test]
fn group_algebra_from_permutation_file() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    write(d, "s3.json", r#"{"generators": [[1, 0, 2], [1, 2, 0]]}"#);
    assert_eq!(qha(d, &["generate", "group-algebra", "--table", "s3.json", "--out", "kS3.json"]).0, 0);
    let (code, out, _) = qha(d, &["check", "kS3.json"]);
    assert_eq!(code, 0);
    assert_eq!(report(&out)["inputs"][0]["name"], "k[s3]");
}
