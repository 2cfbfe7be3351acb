use std::path::PathBuf;
use std::process::{Command, Output};

use lampart::commands::{self, verification_output};
use lampart::Format;
use lampart_core::lambda::verify_recipe;
use lampart_core::RhoVariant;

fn lampart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lampart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lampart(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

#[test]
fn expand_plain() {
    let text = stdout(&["expand", "PLAIN", "10"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.contains(&"4 1"));
    assert!(lines.contains(&"8 4"));
    assert_eq!(stdout(&["expand", "PLAIN", "2"]), "0 0\n1 0\n2 0\n");
    assert_eq!(
        stdout(&["expand", "plain", "--order", "2"]),
        "0 0\n1 0\n2 0\n"
    );
}

#[test]
fn expand_mod3_order_22() {
    let text = stdout(&["expand", "MOD3", "22"]);
    assert_eq!(text.lines().last(), Some("22 4"));
}

#[test]
fn expand_expressions_and_formats() {
    assert_eq!(
        stdout(&["expand", "1/(q;q)", "5", "--format", "csv"]),
        "n,value\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["expand", "(-q^2;q^2)", "6", "--format", "json"])).unwrap();
    assert_eq!(json["order"], 6);
    let values: Vec<i64> = json["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["value"].as_i64().unwrap())
        .collect();
    assert_eq!(values, [1, 0, 1, 0, 1, 0, 2]);
}

#[test]
fn bad_arguments_fail() {
    assert_eq!(lampart(&["expand", "MOD5", "4"]).status.code(), Some(2));
    assert!(!lampart(&["expand", "PLAIN", "-3"]).status.success());
    assert_eq!(lampart(&["table", "7"]).status.code(), Some(2));
    assert!(!lampart(&["verify", "nope"]).status.success());
}

#[test]
fn verify_all_exits_zero() {
    let out = lampart(&["verify", "all", "400"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("401/401 equal").count(), 6);
    assert!(text.ends_with("result: all equal\n"));
}

#[test]
fn verify_json_schema() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "PLAIN", "0", "--format", "json"])).unwrap();
    assert_eq!(
        json,
        serde_json::json!({
            "variant": "PLAIN",
            "order": 0,
            "records": [{"n": 0, "genfun": 0, "direct": 0, "equal": true}],
            "all_equal": true
        })
    );
    let all: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "all", "10", "--format", "json"])).unwrap();
    assert_eq!(all.as_array().unwrap().len(), 6);
}

#[test]
fn corrupted_recipe_fails_verification() {
    let mut recipe = RhoVariant::Odd.recipe();
    recipe.constant = 0;
    let report = verify_recipe(RhoVariant::Odd, &recipe, 20).unwrap();
    let out = verification_output(&[report], Format::Text);
    assert!(!out.success);
    assert!(out.text.contains("first mismatch at n = 0"), "{}", out.text);
    assert!(out.text.ends_with("result: MISMATCH\n"));

    let mut recipe = RhoVariant::Plain.recipe();
    recipe.corrections.clear();
    let report = verify_recipe(RhoVariant::Plain, &recipe, 20).unwrap();
    let out = verification_output(&[report], Format::Text);
    assert!(!out.success);
    assert!(out
        .text
        .contains("first mismatch at n = 0 (genfun 1, direct 0)"));
}

#[test]
fn table_for_eight() {
    let text = stdout(&["table", "8"]);
    assert!(text.contains("4+3+1, 4+2+2, 4+2+1+1, 4+1+1+1+1"));
    assert!(text.contains("rho_od(8)"));
    assert!(text.contains("rho_od(10)=0"));
    let rows = commands::table_rows(8).unwrap();
    let values: Vec<String> = rows.iter().map(|r| r.value.to_string()).collect();
    assert_eq!(values, ["4", "1", "2", "1", "0", "1"]);
    assert_eq!(rows[2].partitions, ["4+3+1", "4+1+1+1+1"]);
    assert!(rows[3].note.is_some());
    assert!(rows.iter().filter(|r| r.note.is_some()).count() == 1);
}

#[test]
fn table_for_two_and_ten() {
    let rows = commands::table_rows(2).unwrap();
    assert!(rows
        .iter()
        .all(|r| r.value == 0.into() && r.partitions.is_empty()));
    let rows = commands::table_rows(10).unwrap();
    assert_eq!(rows[0].partitions.len(), 6);
    assert!(rows[0].partitions.contains(&"5+4+1".to_string()));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["table", "10", "--format", "json"])).unwrap();
    assert_eq!(json["rows"][0]["value"], 6);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["remark-check", "--format", "json"][..],
        &["table", "12"],
        &["verify", "all", "60", "--format", "csv"],
    ] {
        assert_eq!(lampart(args).stdout, lampart(args).stdout, "{args:?}");
    }
}

#[test]
fn remark_check_json_records_both_values() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["remark-check", "--format", "json"])).unwrap();
    let seqs = json.as_array().unwrap();
    assert_eq!(seqs.len(), 2);
    for seq in seqs {
        for h in seq["hypotheses"].as_array().unwrap() {
            let verdict = h["verdict"].as_str().unwrap();
            assert!(["full match", "partial match", "no match"].contains(&verdict));
            assert_eq!(verdict == "partial match", !h["first_divergence"].is_null());
            let terms = h["terms"].as_array().unwrap();
            assert_eq!(terms.len(), 25);
            for t in terms {
                assert!(t["reference"].is_i64());
                assert!(t["computed"].is_i64());
            }
        }
    }
}

#[test]
fn export_then_compare() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plain.txt");
    let p = path.to_str().unwrap();
    stdout(&[
        "bfile-export",
        "PLAIN",
        "--order",
        "40",
        "--index",
        "half",
        "--output",
        p,
    ]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("0 0\n1 0\n2 1\n3 2\n4 4\n"));
    assert_eq!(written.lines().count(), 21);
    let text = stdout(&["bfile-compare", "PLAIN", p]);
    assert!(text.contains("I2: term with index k is the coefficient at n = 2k"));
    assert!(text.contains("verdict: full match (21/21 terms agree)"));

    let direct = stdout(&["bfile-export", "ODD", "6"]);
    assert_eq!(direct, "0 0\n1 0\n2 0\n3 0\n4 1\n5 0\n6 1\n");
}

#[test]
fn compare_against_oeis_fixtures() {
    let text = stdout(&[
        "bfile-compare",
        "PLAIN",
        fixture("a000065.txt").to_str().unwrap(),
    ]);
    assert!(
        text.contains("verdict: full match (61/61 terms agree)"),
        "{text}"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "bfile-compare",
        "ODD",
        fixture("a357456.txt").to_str().unwrap(),
        "--format",
        "json",
    ]))
    .unwrap();
    let hyps = json[0]["hypotheses"].as_array().unwrap();
    assert_eq!(hyps[0]["verdict"], "partial match");
    assert_eq!(hyps[1]["verdict"], "full match");
}

#[test]
fn malformed_bfile_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "# header\n0 0\n1 zero\n").unwrap();
    let out = lampart(&["bfile-compare", "PLAIN", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}
