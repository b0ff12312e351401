use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn eqbundle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqbundle")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = eqbundle(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn assert_valid(name: &str, doc: &Value) {
    let validator = jsonschema::validator_for(&schema(name)).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{name}: {errors:#?}");
}

const CASES: &[(&str, &[&str])] = &[
    ("skeleton", &["skeleton", "--family", "dihedral", "--n", "3", "--coords"]),
    ("skeleton", &["skeleton", "--family", "icosahedral"]),
    ("orbit", &["orbit", "--family", "octahedral"]),
    ("orbit", &["orbit", "--family", "icosahedral"]),
    ("rh-check", &["rh-check", "--all", "--max-n", "4"]),
    ("reps", &["reps", "--family", "tetrahedral", "--target", "u2"]),
    ("reps", &["reps", "--family", "cyclic", "--n", "3", "--target", "finite:octahedral"]),
    ("reps", &["reps", "--family", "dihedral", "--n", "3", "--target", "su2"]),
    ("reps", &["reps", "--family", "icosahedral", "--target", "circle", "--list-limit", "0"]),
    ("zmod-check", &["zmod-check", "--family", "dihedral", "--n", "4"]),
    ("table1", &["table1"]),
    ("classify", &["classify", "--family", "cyclic", "--n", "3", "--target", "circle"]),
    ("classify", &["classify", "--family", "octahedral", "--target", "u2"]),
    ("classify", &["classify", "--family", "tetrahedral", "--target", "su2"]),
    ("beta-check", &["beta-check", "--family", "tetrahedral", "--target", "finite:dihedral:3"]),
    ("verify", &["verify"]),
];

#[test]
fn json_documents_match_their_schemas() {
    for (name, args) in CASES {
        let doc: Value = serde_json::from_str(&stdout(args)).unwrap();
        assert_valid(name, &doc);
    }
}

#[test]
fn schemas_reject_malformed_documents() {
    let mut doc: Value = serde_json::from_str(&stdout(&["table1", "--max-n", "2"])).unwrap();
    doc["rows"][0]["N"] = Value::from("twelve");
    let validator = jsonschema::validator_for(&schema("table1")).unwrap();
    assert!(!validator.is_valid(&doc));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for (_, args) in CASES {
        assert_eq!(eqbundle(args).stdout, eqbundle(args).stdout, "{args:?}");
    }
    let plain = ["classify", "--family", "cyclic", "--n", "4", "--target", "circle", "--format", "plain"];
    assert_eq!(stdout(&plain), stdout(&plain));
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let args = ["table1", "--format", "csv"];
    let status = eqbundle(&[&args[..], &["--output", path.to_str().unwrap()]].concat()).status;
    assert!(status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&args));
}

#[test]
fn table1_csv_rows() {
    let text = stdout(&["table1", "--format", "csv"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,n,one_minus_chi,N");
    for row in ["cyclic,4,3,4", "dihedral,3,11,12", "tetrahedral,,11,12", "octahedral,,23,24", "icosahedral,,59,60"] {
        assert!(lines.contains(&row), "missing {row}");
    }
    assert_eq!(lines.len(), 1 + 11 + 11 + 3);
}

#[test]
fn rh_check_dihedral_two() {
    let doc: Value = serde_json::from_str(&stdout(&["rh-check", "--family", "dihedral", "--n", "2"])).unwrap();
    let r = &doc["entries"][0]["report"];
    assert_eq!(r["chi_x"], -6);
    assert_eq!(r["group_order"], 4);
    assert_eq!(r["holds"], true);
}

#[test]
fn classify_cyclic_two_window() {
    let doc: Value = serde_json::from_str(&stdout(&[
        "classify", "--family", "cyclic", "--n", "2", "--target", "circle", "--window", "-3..3",
    ]))
    .unwrap();
    assert_eq!(doc["window"], serde_json::json!([-3, 3]));
    assert_eq!(doc["congruence_holds"], true);
    let odd: Vec<i64> = doc["classes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["rep"][0]["encoding"] == 1 && c["rep"][1]["encoding"] == 0)
        .map(|c| c["chern"].as_i64().unwrap())
        .collect();
    assert_eq!(odd, vec![-3, -1, 1, 3]);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 14);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| eqbundle(args).status.code();
    assert_eq!(code(&["table1"]), Some(0));
    assert_eq!(code(&["skeleton", "--family", "heptagonal"]), Some(2));
    assert_eq!(code(&["skeleton", "--family", "cyclic"]), Some(2));
    assert_eq!(code(&["skeleton", "--family", "dihedral", "--n", "1"]), Some(2));
    assert_eq!(code(&["classify", "--family", "cyclic", "--n", "2", "--target", "finite:cyclic:2"]), Some(2));
    assert_eq!(code(&["classify", "--family", "cyclic", "--n", "2", "--target", "circle", "--window", "3..-3"]), Some(2));
    assert_eq!(code(&["reps", "--family", "cyclic", "--n", "2", "--target", "u0"]), Some(2));
    assert_eq!(code(&["beta-check", "--family", "cyclic", "--n", "2", "--target", "circle"]), Some(2));
    assert_eq!(code(&["beta-check", "--family", "icosahedral", "--target", "finite:icosahedral", "--bound", "24"]), Some(2));
    assert_eq!(code(&["orbit", "--family", "cyclic", "--n", "2", "--format", "csv"]), Some(2));
    assert_eq!(code(&["no-such-command"]), Some(2));
}

#[test]
fn zmod_check_reports_both_identities() {
    // the literal fixed-rank identity fails for dihedral groups; the
    // summand-count identity holds
    let out = eqbundle(&["zmod-check", "--family", "dihedral", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["report"]["literal_holds"], false);
    assert_eq!(doc["report"]["holds"], true);
}

#[test]
fn verify_plain_lists_every_check() {
    let text = stdout(&["verify", "--format", "plain"]);
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}
