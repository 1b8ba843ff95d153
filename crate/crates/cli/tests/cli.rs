//! End-to-end CLI behaviour: JSON formats, file I/O, and the shipped data.

use cyclecone_core::lattice::Lattice;
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_cyclecone")
}

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(bin()).args(args).output().expect("binary runs");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
    )
}

#[test]
fn shipped_k3_lattice_file_matches_builtin() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../data/k3_lattice.json"
    ))
    .expect("data file present");
    let parsed = Lattice::from_json_str(&text).unwrap();
    assert_eq!(parsed, Lattice::k3());
    let sig = parsed.signature();
    assert_eq!((sig.positive, sig.negative, sig.zero), (3, 19, 0));
}

#[test]
fn schubert_commands_round_trip() {
    let (code, stdout, _) = run(&["schubert", "mult", "s[1,1]", "s[1,1]"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "s[2,2]");

    let (code, stdout, _) = run(&["schubert", "integrate", "s[4,4]", "--json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["integral"], "1");

    // ambient validation propagates as a usage error
    let (code, _, stderr) = run(&["schubert", "mult", "s[1]", "s[1]", "--grassmannian", "4,9"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unsupported Grassmannian"));
}

#[test]
fn cone_dual_reads_files_and_defaults_to_fano_pairing() {
    let dir = std::env::temp_dir();
    let cone_path = dir.join("cyclecone_test_eff.json");
    std::fs::write(
        &cone_path,
        r#"{ "basis": ["g2", "c"], "rays": [[0, 1], ["5", "-8"]] }"#,
    )
    .unwrap();
    let (code, stdout, _) = run(&[
        "cone",
        "dual",
        "--cone",
        cone_path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dual"]["rays"], serde_json::json!([["-1", "20"], ["3", "-5"]]));

    // explicit pairing file
    let pairing_path = dir.join("cyclecone_test_pairing.json");
    std::fs::write(
        &pairing_path,
        r#"{ "basis": ["g2", "c"], "m": [["1", "0"], ["0", "1"]] }"#,
    )
    .unwrap();
    let (code, stdout, _) = run(&[
        "cone",
        "dual",
        "--rays",
        "1,0;0,1",
        "--pairing",
        pairing_path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dual"]["rays"], serde_json::json!([["0", "1"], ["1", "0"]]));
}

#[test]
fn blowup_verify30q_via_files() {
    let dir = std::env::temp_dir();
    let gram_path = dir.join("cyclecone_test_gram.json");
    std::fs::write(
        &gram_path,
        r#"{ "labels": ["e", "f"], "gram": [["0", "1"], ["1", "0"]] }"#,
    )
    .unwrap();
    let (code, stdout, _) = run(&[
        "blowup",
        "verify30q",
        "--gram",
        gram_path.to_str().unwrap(),
        "--x",
        "0,0,1",
        "--y",
        "0,0,1",
        "--json",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["lhs"], "-60");
    assert_eq!(v["rhs"], "-60");
    assert_eq!(v["equal"], true);

    // malformed gram content is a usage error (exit 2)
    let bad_path = dir.join("cyclecone_test_bad_gram.json");
    std::fs::write(&bad_path, r#"{ "labels": ["e"], "gram": [["0", "1"]] }"#).unwrap();
    let (code, _, _) = run(&[
        "blowup",
        "verify30q",
        "--gram",
        bad_path.to_str().unwrap(),
        "--x",
        "0,1",
        "--y",
        "0,1",
    ]);
    assert_eq!(code, Some(2));
}

#[test]
fn catalog_commands() {
    let (code, stdout, _) = run(&["catalog", "show", "fano-lines", "c2", "--json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["class"]["coords"], serde_json::json!(["5", "-8"]));
    assert!(!v["provenance"]["statement"].as_str().unwrap().is_empty());

    let (code, stdout, _) = run(&["catalog", "list", "kummer-4fold", "--json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 163);

    let (code, stdout, _) = run(&["catalog", "eval", "fano-lines", "pair(g2, g2)"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "108");

    // degree overflow surfaces as a usage error
    let (code, _, stderr) = run(&["catalog", "eval", "fano-lines", "pair(pair(g2,c), c)"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("degree overflow"));
}

#[test]
fn bb_qpair_uses_derived_delta_square() {
    let dir = std::env::temp_dir();
    let gram_path = dir.join("cyclecone_test_qpair_gram.json");
    std::fs::write(
        &gram_path,
        r#"{ "labels": ["h"], "gram": [["6"]] }"#,
    )
    .unwrap();
    let (code, stdout, _) = run(&[
        "bb",
        "qpair",
        "--gram",
        gram_path.to_str().unwrap(),
        "--x",
        "1,0",
        "--y",
        "1,0",
        "--json",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["q"], "6");
    assert_eq!(v["c2_pairing"], "180");
    assert_eq!(v["delta_square"], "-2");
}

#[test]
fn gap_report_with_custom_interval() {
    let (code, stdout, _) = run(&["cone", "gap-report", "--lambda", "1", "--lambda", "3/2", "--json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["nef_strictly_exceeds_eff"], true);
    assert_eq!(v["lambda_endpoints"], serde_json::json!(["1", "3/2"]));

    // empty interval rejected
    let (code, _, _) = run(&["cone", "gap-report", "--lambda", "2", "--lambda", "1"]);
    assert_eq!(code, Some(2));
}
