//! Golden-file regression of the CLI for every catalog entry. Set
//! `UPDATE_GOLDEN=1` to rewrite the files.

use std::path::PathBuf;
use std::process::Command;

use reductive_workbench::catalog::CATALOG;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reductive-workbench"))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/golden")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn compare(file: &str, actual: &str) {
    let path = golden_dir().join(file);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(expected == actual, "{file} differs from the golden copy");
}

#[test]
fn golden_reports() {
    for name in CATALOG {
        let (code, json, err) = run(&["analyze", "--catalog", name, "--json"]);
        assert_eq!(code, 0, "{name}: {err}");
        compare(&format!("{name}.json"), &json);
        let (code, text, _) = run(&["analyze", "--catalog", name]);
        assert_eq!(code, 0);
        compare(&format!("{name}.txt"), &text);
    }
}

#[test]
fn full_catalog_is_byte_identical_across_runs() {
    let first = run(&["analyze", "--catalog", "all", "--json"]);
    for _ in 0..2 {
        assert_eq!(run(&["analyze", "--catalog", "all", "--json"]), first);
    }
    assert_eq!(first.0, 0);
}

#[test]
fn thread_cap_does_not_change_output() {
    let capped = bin()
        .args(["analyze", "--catalog", "all", "--json"])
        .env("REDUCTIVE_WORKBENCH_THREADS", "1")
        .output()
        .unwrap();
    let (_, free, _) = run(&["analyze", "--catalog", "all", "--json"]);
    assert_eq!(String::from_utf8(capped.stdout).unwrap(), free);
    let bad = bin()
        .args(["analyze", "--catalog", "all"])
        .env("REDUCTIVE_WORKBENCH_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn spec_files() {
    let examples = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs");
    let sphere = examples.join("sphere.json");
    let (code, out, err) = run(&["analyze", sphere.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dims"]["m"], 2);
    assert_eq!(v["flags"]["isotropy_probe"], "irreducible");

    let malformed = examples.join("malformed.json");
    let (code, _, err) = run(&["analyze", malformed.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 4, column"), "{err}");

    let (code, _, err) = run(&["analyze", "/nonexistent.json"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn numeric_checks_and_listing() {
    let (code, out, _) = run(&["analyze", "--catalog", "so4_mod_so2", "--numeric-checks", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["numeric"]["passed"], true);
    let (code, out, _) = run(&["analyze", "--list-catalog"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().collect::<Vec<_>>(), CATALOG);
}

#[test]
fn fast_checks_flag() {
    let (code, out, _) = run(&["analyze", "--catalog", "so3_mod_so2", "--checks", "fast", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["connection"]["bianchi_with_torsion"].is_null());
}
