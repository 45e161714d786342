//! Drives the installed binary against the committed fixtures: exit
//! codes, output determinism, and document round trips.

mod common;

use common::{binary, fixture_path};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(binary()).args(args).output().unwrap()
}

fn fixture(name: &str) -> String {
    fixture_path(name).to_str().unwrap().to_string()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn passing_checks_exit_zero() {
    let out = run(&["check-hyperfield", "signs"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("pass"));

    let out = run(&["check-hyperfield", &fixture("signs_table.json")]);
    assert_eq!(out.status.code(), Some(0));

    for kind in ["weak", "strong"] {
        let out = run(&["check-gpf", "--type", kind, &fixture("u24_signs.json")]);
        assert_eq!(out.status.code(), Some(0), "{kind}");
    }

    let out = run(&["circuits", &fixture("u23_tropical.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("circuit:"));
}

#[test]
fn failing_checks_exit_one() {
    let out = run(&[
        "check-gpf",
        "--type",
        "weak",
        &fixture("bad_exchange_krasner.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("FAIL"));

    let out = run(&[
        "iso",
        &fixture("u24_signs.json"),
        &fixture("u12_signs.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_input_errors_exit_two() {
    // unknown subcommand
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    // missing file
    let out = run(&["dual", "/nonexistent/matroid.json"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed document
    let tmp = std::env::temp_dir().join("hypermatroid-cli-broken.json");
    std::fs::write(&tmp, "{\"schema\": \"matroid/1\"").unwrap();
    let out = run(&["dual", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&tmp).ok();

    // unknown ground label in --set
    let out = run(&["restrict", "--set", "z", &fixture("u24_signs.json")]);
    assert_eq!(out.status.code(), Some(2));

    // direct sum with clashing labels and no prefixes
    let out = run(&[
        "dsum",
        &fixture("u24_signs.json"),
        &fixture("u12_signs.json"),
    ]);
    assert_eq!(out.status.code(), Some(2));

    // no homomorphism from the tropical numbers to the signs
    let out = run(&["push", "--to", "signs", &fixture("u23_tropical.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_prints_to_stdout_and_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("Usage"));
    assert!(out.stderr.is_empty());
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["--format", "json", "underlying", &*fixture("k4_krasner.json")],
        vec!["--format", "json", "coproduct", &*fixture("u24_signs.json")],
        vec![
            "--format",
            "text",
            "antipode",
            "--method",
            "recursive",
            &*fixture("u24_signs.json"),
        ],
        vec!["--format", "json", "circuits", &*fixture("k4_krasner.json")],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn antipode_methods_agree_through_the_cli() {
    let file = fixture("u24_signs.json");
    let takeuchi = run(&["antipode", "--method", "takeuchi", &file]);
    let recursive = run(&["antipode", "--method", "recursive", &file]);
    assert_eq!(takeuchi.status.code(), Some(0));
    assert_eq!(takeuchi.stdout, recursive.stdout);
}

#[test]
fn minors_compose_through_documents() {
    // restrict to {1,2,3} then contract 2, all through temp files
    let out = run(&[
        "--format",
        "json",
        "restrict",
        "--set",
        "1,2,3",
        &fixture("u24_signs.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let tmp = std::env::temp_dir().join("hypermatroid-cli-minor.json");
    std::fs::write(&tmp, &out.stdout).unwrap();

    let out = run(&[
        "--format",
        "json",
        "contract",
        "--set",
        "2",
        tmp.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let phi = hypermatroid::io::parse_matroid(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(phi.ground().labels(), &["1".to_string(), "3".to_string()]);
    assert_eq!(phi.rank(), 1);
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn verify_hopf_passes_on_seed_pair() {
    let out = run(&[
        "verify-hopf",
        "--max-degree",
        "3",
        &fixture("u12_signs.json"),
        &fixture("u23_tropical.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for check in [
        "hopf-grading",
        "hopf-coassociativity",
        "hopf-counit",
        "hopf-coproduct-multiplicative",
        "hopf-antipode-identity",
        "hopf-antipode-methods",
    ] {
        assert!(text.contains(check), "missing {check} in output");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn json_outputs_are_canonical_documents() {
    let out = run(&["--format", "json", "dual", &fixture("u23_tropical.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let doc: hypermatroid::io::MatroidDoc = serde_json::from_str(&text).unwrap();
    let reprinted = hypermatroid::io::to_canonical_json(&doc).unwrap();
    assert_eq!(text, reprinted);

    let out = run(&[
        "--format",
        "json",
        "check-gpf",
        "--type",
        "strong",
        &fixture("k4_krasner.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let doc: hypermatroid::io::ReportDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(text, hypermatroid::io::to_canonical_json(&doc).unwrap());
}
