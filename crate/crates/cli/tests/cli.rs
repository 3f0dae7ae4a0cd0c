use std::path::Path;

use bnloci_cli::run;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn bnloci(args: &[&str], stdin: &str) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("bnloci").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn error_kind(stderr: &str) -> String {
    let v: serde_json::Value =
        serde_json::from_str(stderr.trim()).expect("stderr is one JSON object");
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn params_reports_normalization() {
    let (code, out, _) = bnloci(&["params", "--g", "10", "--r", "3", "--d", "11"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["format_version"], 1);
    assert_eq!(v["dualized"], true);
    assert_eq!(v["normalized"]["r"], 1);
    assert_eq!(v["normalized"]["d"], 7);
}

#[test]
fn invalid_parameters_exit_one() {
    let (code, out, err) = bnloci(&["params", "--g", "5", "--r", "0", "--d", "3"], "");
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert_eq!(error_kind(&err), "invalid_params");
}

#[test]
fn unknown_flag_exits_two() {
    let (code, _, err) = bnloci(&["params", "--genus", "5"], "");
    assert_eq!(code, 2);
    assert!(err.contains("--genus"));
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, err) = bnloci(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("fill-construct"));
    assert!(err.is_empty());
}

#[test]
fn wrong_format_version_exits_two() {
    let doc = r#"{"format_version": 7, "alpha": 1, "beta": 1, "g": 2,
        "cells": [{"row": 1, "col": 1, "index": 1}]}"#;
    let (code, _, err) = bnloci(&["fill-transpose"], doc);
    assert_eq!(code, 2);
    assert_eq!(error_kind(&err), "format_version");
}

#[test]
fn garbage_input_exits_two() {
    let (code, _, err) = bnloci(&["fill-transpose"], "not json");
    assert_eq!(code, 2);
    assert_eq!(error_kind(&err), "json");
}

#[test]
fn missing_format_version_exits_two() {
    let (code, _, err) = bnloci(
        &["fill-transpose"],
        r#"{"alpha": 1, "beta": 1, "g": 1, "cells": []}"#,
    );
    assert_eq!(code, 2);
    assert_eq!(error_kind(&err), "malformed");
}

#[test]
fn ascii_render_of_non_filling_exits_two() {
    let (code, out, err) = bnloci(&["--render", "ascii", "certify-maxrank", "--r", "1"], "");
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(error_kind(&err), "usage");
}

#[test]
fn invalid_filling_exits_one_with_report() {
    let (code, out, _) = bnloci(
        &[
            "fill-validate",
            "--in",
            &fixture("fig1_left"),
            "--chain",
            &fixture("fig1_right_chain"),
        ],
        "",
    );
    assert_eq!(code, 0, "5 has order 3 on this chain too");
    assert!(out.contains("\"valid\": true"));

    let generic = r#"{"format_version": 1, "g": 10, "special": []}"#;
    let dir = std::env::temp_dir().join(format!("bnloci-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let chain = dir.join("generic.json");
    std::fs::write(&chain, generic).unwrap();
    let (code, out, _) = bnloci(
        &[
            "fill-validate",
            "--in",
            &fixture("fig1_left"),
            "--chain",
            chain.to_str().unwrap(),
        ],
        "",
    );
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, 1);
    assert!(out.contains("repeat_at_generic"));
}

#[test]
fn budget_is_enforced() {
    let (code, _, err) = bnloci(
        &["fill-enumerate", "--alpha", "6", "--beta", "6", "--g", "36"],
        "",
    );
    assert_eq!(code, 1);
    assert_eq!(error_kind(&err), "budget_exceeded");
}

#[test]
fn construction_out_of_range_exits_one() {
    let (code, _, err) = bnloci(
        &[
            "fill-construct",
            "--mode",
            "staircase",
            "--alpha",
            "3",
            "--beta",
            "3",
            "--g",
            "5",
        ],
        "",
    );
    assert_eq!(code, 1);
    assert_eq!(error_kind(&err), "out_of_range");
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("bnloci-out-{}.json", std::process::id()));
    let (code, out, _) = bnloci(
        &[
            "certify-maxrank",
            "--r",
            "1",
            "--out",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("{\n  \"format_version\": 1"));
}

#[test]
fn stdin_and_in_flag_agree() {
    let path = fixture("fig3_right");
    let text = std::fs::read_to_string(&path).unwrap();
    let from_file = bnloci(&["fill-transpose", "--in", &path], "");
    let from_stdin = bnloci(&["fill-transpose"], &text);
    assert_eq!(from_file, from_stdin);
    assert_eq!(from_file.0, 0);
}

#[test]
fn transpose_twice_is_identity() {
    let text = std::fs::read_to_string(fixture("fig2_right")).unwrap();
    let (_, once, _) = bnloci(&["fill-transpose"], &text);
    let (_, twice, _) = bnloci(&["fill-transpose"], &once);
    assert_eq!(twice, text);
}
