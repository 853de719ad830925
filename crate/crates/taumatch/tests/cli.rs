mod common;

use common::*;
use taumatch::report::{BijectionOutput, PairOutput, TauOutput};
use taumatch::workspace::Workspace;
use taumatch_core::{build_report, ReportOptions};

fn scratch(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("taumatch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const A3: &str = r#"{"schema": 1,
  "quiver": {"vertices": 3, "arrows": [{"name": "a", "source": 1, "target": 2}, {"name": "c", "source": 1, "target": 3}]},
  "modules": {"S1S2": {"dims": [1, 1, 0]}},
  "pairs": {"twice": {"T": ["S1", "S1"]}, "short": {"T": ["S1"]}, "full": {"T": ["P1", "P2", "P3"]}}}"#;

#[test]
fn repeated_summand_is_not_basic() {
    let p = scratch("a3.json", A3);
    let r = run(&["check-pair", "twice", "--workspace", p.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.stdout.contains("not basic"), "{}", r.stdout);
}

#[test]
fn too_few_summands() {
    let p = scratch("a3.json", A3);
    let r = run(&["check-pair", "short", "--workspace", p.to_str().unwrap(), "--json", "-"]);
    assert_eq!(r.code, 3);
    let out: PairOutput = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(out.status, "tau-rigid pair only");
}

#[test]
fn bijection_against_invalid_pair_fails_verification() {
    let p = scratch("a3.json", A3);
    let r = run(&["bijection", "full", "twice", "--workspace", p.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("basic"), "{}", r.stderr);
}

#[test]
fn parse_errors_exit_2() {
    let p = scratch(
        "bad.json",
        r#"{"schema": 1, "quiver": {"vertices": 1, "arrows": []}, "relations": [["z"]]}"#,
    );
    let r = run(&["check-pair", "x", "--workspace", p.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("relations[0]") && r.stderr.contains("`z`"),
        "{}",
        r.stderr
    );

    let p = scratch("syntax.json", "{\"schema\": 1,\n\"quiver\": }");
    let r = run(&["check-pair", "x", "--workspace", p.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
}

#[test]
fn unresolved_names_exit_2() {
    assert_eq!(run_on("fork", &["check-pair", "nope"]).code, 2);
    assert_eq!(run_on("fork", &["tau", "Z9"]).code, 2);
    assert_eq!(run(&["check-pair", "left"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
}

#[test]
fn infinite_algebra_is_a_parse_error() {
    let p = scratch(
        "loop.json",
        r#"{"schema": 1, "quiver": {"vertices": 1, "arrows": [{"name": "x", "source": 1, "target": 1}]}}"#,
    );
    let r = run(&[
        "tau",
        "S1",
        "--workspace",
        p.to_str().unwrap(),
        "--max-path-length",
        "8",
    ]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not finite dimensional"), "{}", r.stderr);
}

#[test]
fn tau_of_jordan_block_is_simple() {
    let r = run_on("loop_source", &["tau", "M11", "--json", "-"]);
    assert_eq!(r.code, 0);
    let out: TauOutput = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(out.translate.dims, vec![0, 1]);
    assert!(out.isomorphic_to.contains(&"S2".to_string()));
}

#[test]
fn rigidity_exit_codes() {
    let p = scratch("a3.json", A3);
    let ws = p.to_str().unwrap();
    assert_eq!(run(&["check-rigid", "P1", "--workspace", ws]).code, 0);
    assert_eq!(run(&["check-rigid", "I3", "--workspace", ws]).code, 0);
    // τ(S1) = P1 and S2 maps into it
    let r = run(&["check-rigid", "S1S2", "--workspace", ws]);
    assert_eq!(r.code, 3);
    assert!(r.stdout.contains("nonzero map"), "{}", r.stdout);
}

#[test]
fn json_file_output_alongside_text() {
    let dir = std::env::temp_dir().join(format!("taumatch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("out.json");
    let r = run_on(
        "two_cycle",
        &["bijection", "left", "right", "--json", out.to_str().unwrap()],
    );
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("matching s = (1 2)"));
    let parsed: BijectionOutput = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(parsed.matching.permutation, "(1 2)");
}

/// The serialized report read back equals the report built directly from the library.
#[test]
fn report_round_trip() {
    for ws in WORKSPACES {
        let w = Workspace::load(&workspace_path(ws), None).unwrap();
        let (l, r) = (&w.pairs["left"], &w.pairs["right"]);
        let opts = ReportOptions {
            enumerate_all: true,
            ..Default::default()
        };
        let report = build_report(&l.pair, &r.pair, &opts).unwrap();
        let summary = |p: &taumatch::workspace::NamedPair| taumatch::report::PairSummary {
            name: p.name.clone(),
            summands: taumatch::report::summand_table(&p.t, &p.p, &p.pair.t, &p.pair.p),
        };
        let direct = BijectionOutput::new(summary(l), summary(r), &report);
        let cli = run_on(ws, &["bijection", "left", "right", "--all", "--json", "-"]);
        let parsed: BijectionOutput = serde_json::from_str(&cli.stdout).unwrap();
        assert_eq!(parsed, direct);
    }
}
