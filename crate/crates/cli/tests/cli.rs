use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_knotsurgery"))
}

fn code(args: &[&str]) -> i32 {
    bin().args(args).output().unwrap().status.code().unwrap()
}

#[test]
fn json_report_to_file_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let st = bin().args(["--knot", "table:5_2", "--out"]).arg(out).status().unwrap();
        assert!(st.success());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["basic_classes"]["verdict"], "NONSYMPLECTIC_BOTH_ORIENTATIONS");
    assert_eq!(v["manifold"]["chi"], 3);
    assert_eq!(v["manifold"]["c"], 8);
    assert_eq!(v["knot"]["alexander_json"]["terms"], serde_json::json!([[1, 2], [0, -3], [-1, 2]]));
    for a in v["manifold"]["assumptions"].as_array().unwrap() {
        assert!(!a["citation"].as_str().unwrap().is_empty());
    }
}

#[test]
fn seifert_file_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    std::fs::write(&path, "[[-1, 1], [0, -1]]").unwrap();
    let out =
        bin().arg("--knot").arg(format!("seifert:{}", path.display())).args(["--format", "text"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("t - 1 + t^-1"));
    assert!(text.contains("INCONCLUSIVE"));

    std::fs::write(&path, "[[1, 0], [0, 1]]").unwrap();
    assert_eq!(code(&["--knot", &format!("seifert:{}", path.display())]), 3);
}

#[test]
fn custom_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    std::fs::write(&path, r#"[{"name": "tw", "seifert": [[1, 1], [0, 3]], "braid": null, "genus": null}]"#).unwrap();
    let out = bin().args(["--knot", "table:tw", "--table"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["knot"]["genus_assumed_from_degree"], true);
    assert_eq!(v["basic_classes"]["classes"][0]["sw_magnitude"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--knot", "table:K-prime"]), 0);
    assert_eq!(code(&["--knot", "braid 2: 1"]), 4);
    assert_eq!(code(&["--knot", "braid 2: x"]), 2);
    assert_eq!(code(&["--knot", "table:nope"]), 2);
    assert_eq!(code(&["--knot", "braid 3: 1 1"]), 3);
    assert_eq!(code(&["--knot", "table:5_1", "--genus", "1"]), 4);
    assert_eq!(code(&["--sweep", "3..1,1..1"]), 2);
    assert_eq!(code(&["--knot", "table:K-prime", "--base", "E2n", "--n", "0"]), 2);
}

#[test]
fn sweep_csv() {
    let out = bin().args(["--sweep", "1..3,1..2", "--format", "csv"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("n,g,chi,c"));
    assert!(text.lines().any(|l| l == "2,1,6,16"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn verify_flag() {
    let out = bin().args(["--knot", "table:5_2#5_2", "--verify", "--base", "E2n", "--n", "2"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verification"]["presentations_compared"], true);
    assert_eq!(v["basic_classes"]["classes"][1]["a"], 6);
    assert_eq!(v["basic_classes"]["classes"][1]["sw_magnitude"], 4);
}
