//! End-to-end tests driving the built binary: output goldens and the
//! exit-code contract (0 success/pure, 1 impure or mismatch, 2 bad input).

use std::process::{Command, Output};

fn stairgrid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stairgrid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn encode_renders_staircase_rows() {
    let out = stairgrid(&["encode", "58634127"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2 0 1\n  1 0\n    1\n");
}

#[test]
fn encode_json_golden() {
    let out = stairgrid(&["encode", "12", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"size\":1,\"rows\":[[1]]}\n");
}

#[test]
fn decode_inverts_encode() {
    let out = stairgrid(&["decode", r#"{"size":3,"rows":[[2,0,1],[1,0],[1]]}"#]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "56734128\n");
    // And the decoded permutation encodes back to the same rows.
    let back = stairgrid(&["encode", "56734128", "--json"]);
    assert_eq!(stdout(&back), "{\"size\":3,\"rows\":[[2,0,1],[1,0],[1]]}\n");
}

#[test]
fn decode_rejects_invalid_encoding() {
    // Boxes (1,2) and (2,3) cross with both corners present: not realizable.
    let out = stairgrid(&["decode", r#"{"size":3,"rows":[[0,1,0],[0,1],[0]]}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: "));
}

#[test]
fn purity_exit_codes() {
    let pure = stairgrid(&["purity", "21"]);
    assert_eq!(pure.status.code(), Some(0));
    assert!(stdout(&pure).contains("pure: true"));

    let impure = stairgrid(&["purity", "2143"]);
    assert_eq!(impure.status.code(), Some(1));
    let text = stdout(&impure);
    assert!(text.contains("pure: false"));
    assert!(text.contains("min maximal set size: 5"));
    assert!(text.contains("max maximal set size: 6"));

    let invalid = stairgrid(&["purity", "123"]);
    assert_eq!(invalid.status.code(), Some(2));
    assert!(stderr(&invalid).contains("contains 123"));
}

#[test]
fn purity_json_reports_witnesses() {
    let out = stairgrid(&["purity", "2143", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["is_pure"], serde_json::json!(false));
    assert_eq!(report["min_size"], serde_json::json!(5));
    assert_eq!(report["max_size"], serde_json::json!(6));
    assert_eq!(report["witness_max"].as_array().unwrap().len(), 6);
}

#[test]
fn boundary_json_golden() {
    let out = stairgrid(&["boundary", "2143", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"boxes":[[1,2],[1,3],[2,1],[2,2],[2,3],[3,1],[3,2]]}"#
    );
}

#[test]
fn tables_oracle_agreement() {
    let i = stairgrid(&["tables", "i", "5", "--oracle"]);
    assert_eq!(i.status.code(), Some(0), "{}", stderr(&i));
    let i_text = stdout(&i);
    let lines: Vec<&str> = i_text.lines().collect();
    assert_eq!(lines[0], "n\\k,0,0 oracle,1,1 oracle,2,2 oracle,3,3 oracle,4,4 oracle,5,5 oracle,6,6 oracle,7,7 oracle,8,8 oracle,9,9 oracle");
    assert_eq!(lines.len(), 7);

    let j = stairgrid(&["tables", "j", "7", "--oracle", "--format", "json"]);
    assert_eq!(j.status.code(), Some(0), "{}", stderr(&j));
    let table: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    let cells = table["cells"].as_array().unwrap();
    // Every emitted cell carries a matching oracle value.
    for cell in cells {
        assert_eq!(cell["value"], cell["oracle"]);
    }
    // J(3,1) = 4 appears in the table.
    assert!(cells
        .iter()
        .any(|c| c["row"] == 3 && c["k"] == 1 && c["value"] == "4"));
}

#[test]
fn tables_j_requires_positive_bound() {
    let out = stairgrid(&["tables", "j", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_coefficients_match_known_counts() {
    let out = stairgrid(&["series", "--order", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let f: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(f["order"], serde_json::json!(6));
    let coeff = |n: u64, k: u64| {
        f["coeffs"]
            .as_array()
            .unwrap()
            .iter()
            .find(|t| t[0] == n && t[1] == k)
            .map(|t| t[2].as_str().unwrap().to_string())
    };
    // Known independent-set counts of the staircase downcore.
    assert_eq!(coeff(0, 0).as_deref(), Some("1"));
    assert_eq!(coeff(2, 1).as_deref(), Some("3"));
    assert_eq!(coeff(3, 2).as_deref(), Some("14"));
    assert_eq!(coeff(4, 4).as_deref(), Some("105"));
    // The empty set always counts once per size.
    for n in 1..=6 {
        assert_eq!(coeff(n, 0).as_deref(), Some("1"), "n = {n}");
    }
}

#[test]
fn verify_runs_one_suite() {
    let out = stairgrid(&["verify", "encoding-bijection", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("encoding-bijection: PASS ("), "{text}");
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = stairgrid(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("valid suites"));
}
