use std::path::PathBuf;
use std::process::{Command, Output};

use esemig_cli::format::MagmaFile;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_esemig");

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("run esemig")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn run_on(cmd: &str, file: &str, extra: &[&str]) -> (i32, Value) {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = run(&args);
    (out.status.code().unwrap(), json(&out))
}

#[test]
fn text_and_json_files_agree() {
    let text = MagmaFile::load(&data("klein_joined.txt")).unwrap();
    let json = MagmaFile::load(&data("klein_joined.json")).unwrap();
    assert_eq!(text, json);
}

#[test]
fn parse_round_trips_to_the_gallery_text() {
    let out = run(&[
        "parse",
        data("klein_joined.json").to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    let expected = std::fs::read_to_string(data("klein_joined.txt")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
}

#[test]
fn gallery_file_matches_checked_in_copy() {
    let out = run(&["gallery", "klein_joined"]);
    let expected = std::fs::read_to_string(data("klein_joined.txt")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
}

#[test]
fn classify_klein_grouplike() {
    let (code, r) = run_on("classify", "klein_grouplike.txt", &[]);
    assert_eq!(code, 0);
    let c = &r["classification"];
    assert_eq!(c["flags"]["grouplike"], true);
    assert_eq!(c["flags"]["unipotent"], true);
    assert_eq!(c["kernel"], serde_json::json!(["e", "a"]));
}

#[test]
fn verify_zn_min_two_sided_passes() {
    let (code, r) = run_on("verify", "zn_min_5.txt", &["--mode", "two-sided"]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "proved-pass");
}

#[test]
fn verify_zn_min_identical_fails_with_witness() {
    let (code, r) = run_on("verify", "zn_min_5.txt", &["--mode", "identical"]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "fail");
    let text = r.to_string();
    assert!(text.contains(r#"["1","1"]"#), "{text}");
}

#[test]
fn quotient_of_klein_joined() {
    let (code, r) = run_on("quotient", "klein_joined.txt", &[]);
    assert_eq!(code, 0, "{r}");
    assert_ne!(r["verdict"], "fail");
    let text = r.to_string();
    assert!(text.contains(r#"["e","η"]"#), "{text}");
}

#[test]
fn factorize_klein_joined() {
    let (code, r) = run_on("factorize", "klein_joined.txt", &[]);
    assert_eq!(code, 0, "{r}");
    let text = r.to_string();
    assert!(text.contains(r#"["e","η"]"#), "{text}");
    assert!(text.contains(r#"["e","a","e","a"]"#), "{text}");
}

#[test]
fn malformed_file_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "elements: 0 1\nop dot:\n0 1\n1 x\n").unwrap();
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["error"]["line"], 4);
    assert!(r["error"]["column"].as_u64().unwrap() >= 1);
}

#[test]
fn precondition_failure_exits_3() {
    let (code, r) = run_on("quotient", "klein_grouplike.txt", &[]);
    assert_eq!(code, 3, "{r}");
    assert!(r.get("error").is_some());
}

#[test]
fn raw_limit_above_default_needs_long_run() {
    let out = run(&["enumerate", "--group", "cyclic(4)", "--raw-limit", "4"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn raw_scan_of_order_four_exits_4_by_default() {
    let out = run(&[
        "enumerate",
        "--group",
        "klein_group",
        "--method",
        "raw-table",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn enumerate_small_group_lists_tables() {
    let out = run(&[
        "enumerate",
        "--group",
        "cyclic(3)",
        "--mode",
        "identical",
        "--dump",
    ]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["details"]["count"], 4);
}
