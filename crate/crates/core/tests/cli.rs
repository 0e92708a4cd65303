use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn kkwreath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kkwreath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kkwreath-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn embed_z4_reports_injective() {
    let out = kkwreath(&["embed", "--extension", &fixture("z4_over_z2.json"), "--section", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "embed");
    assert_eq!(r["checks"][0]["witnesses"]["injective"], true);
    assert_eq!(r["summary"]["exit_status"], 0);
}

#[test]
fn every_section_index_is_accepted() {
    for i in 0..4 {
        let out = kkwreath(&[
            "embed",
            "--extension",
            &fixture("z4_over_z2.json"),
            "--section",
            &i.to_string(),
        ]);
        assert_eq!(out.status.code(), Some(0), "section {i}");
    }
    let out = kkwreath(&["embed", "--extension", &fixture("z4_over_z2.json"), "--section", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let broken = scratch("broken.json", "\u{1}\u{2} not json");
    let out = kkwreath(&["embed", "--extension", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = scratch(
        "missing_f.json",
        r#"{"A": {"table": [[0]]}, "G": {"table": [[0]]}, "B": {"table": [[0]]}, "k": [0]}"#,
    );
    let out = kkwreath(&["embed", "--extension", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`f`"));

    let out = kkwreath(&["embed", "--extension", "/nonexistent/extension.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(kkwreath(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn group_round_trip_through_the_binary() {
    let out = kkwreath(&["group", "--input", &fixture("q8.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let table = &r["checks"][1]["witnesses"];
    let original: Value = serde_json::from_str(&std::fs::read_to_string(fixture("q8.json")).unwrap()).unwrap();
    assert_eq!(table, &original);
}

#[test]
fn text_output_and_out_file() {
    let target = std::env::temp_dir().join(format!("kkwreath-out-{}.json", std::process::id()));
    let out = kkwreath(&[
        "wreath",
        "--a",
        &fixture("z2.json"),
        "--b",
        &fixture("z2.json"),
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(r["checks"][0]["witnesses"]["order"], 8);

    let out = kkwreath(&[
        "verify-universality",
        "--extension",
        &fixture("s3_split.json"),
        "--text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[PASS] universality.factorization"));
}

#[test]
fn other_targets_and_budget_overflow() {
    let tiny = scratch("z2_target.json", r#"{"table": [[0,1],[1,0]]}"#);
    let out = kkwreath(&[
        "verify-universality",
        "--extension",
        &fixture("s3_split.json"),
        "--target",
        tiny.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = kkwreath(&["wreath", "--a", &fixture("q8.json"), "--b", &fixture("q8.json")]);
    assert_eq!(out.status.code(), Some(2), "budget overflow is an input error");
}

#[test]
fn remaining_subcommands_pass_on_fixtures() {
    let runs: [&[&str]; 5] = [
        &["beck-universal", "--module", &fixture("z3_inversion_module.json")],
        &["free-kernel", "--extension", &fixture("s3_split.json"), "--maxlen", "4"],
        &["crude", "--extension", &fixture("q8_over_klein.json")],
        &["lie-embed", "--extension", &fixture("aff1.json"), "--degree", "3"],
        &["group", "--input", &fixture("s3_permutations.json")],
    ];
    for args in runs {
        let out = kkwreath(args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn heisenberg_law_is_informational() {
    let out = kkwreath(&[
        "lie-embed",
        "--extension",
        &fixture("h3.json"),
        "--section",
        &fixture("h3_section.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let law = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "lie.homomorphism_law")
        .unwrap();
    assert_eq!(law["status"], "informational");
    assert_eq!(law["witnesses"]["defects"][0]["monomial"], "1");
    let out = kkwreath(&["lie-embed", "--extension", &fixture("h3.json")]);
    assert_eq!(out.status.code(), Some(2), "no section available");
}
