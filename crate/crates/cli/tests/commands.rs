// SPDX-License-Identifier: Apache-2.0

//! End-to-end runs of the `fuselift` binary against the bundled models.

use std::path::PathBuf;
use std::process::{Command, Output};

use fuselift::io;
use fuselift::{Problem, Ring};

fn models() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuselift"))
        .args(args)
        .env("FUSELIFT_CATALOG_DIR", models())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn check_passes_on_bundled_models() {
    let o = run(&["check", "ising.ring.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = run(&["check", "k2.ext.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("D^⊥ = {0,2}"), "{}", stdout(&o));
    for m in [
        "z4.space.json",
        "sl2k2.inv.json",
        "pf4.ext.json",
        "trivial.ext.json",
    ] {
        assert_eq!(code(&run(&["check", m])), 0, "{m}");
    }
}

#[test]
fn check_reports_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(models().join("ising.ring.json")).unwrap();

    let negative = dir.path().join("neg.ring.json");
    std::fs::write(&negative, text.replacen("\"n\": 1", "\"n\": -1", 1)).unwrap();
    assert_eq!(code(&run(&["check", negative.to_str().unwrap()])), 2);

    // ε⊠ε⊠ε gains an extra ε: well-formed but not associative
    let extra = r#"{"a": "eps", "b": "eps", "c": "eps", "n": 1}, {"#;
    let broken = dir.path().join("broken.ring.json");
    std::fs::write(
        &broken,
        text.replacen("{\n      \"a\"", &format!("{extra}\n      \"a\""), 1),
    )
    .unwrap();
    let o = run(&["check", broken.to_str().unwrap()]);
    assert_eq!(code(&o), 1, "{}", stderr(&o));
    assert!(
        stderr(&o).contains("associativity") || stderr(&o).contains("dual"),
        "{}",
        stderr(&o)
    );

    assert_eq!(code(&run(&["check", "no/such/file.json"])), 2);
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(code(&run(&["check", garbage.to_str().unwrap()])), 2);
}

#[test]
fn extend_prints_sector_rows() {
    let o = run(&["extend", "k2.ext.json"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1 + 3, "{out}");
    assert!(out.contains("sigma⊗V[1] + sigma⊗V[3]"));

    let o = run(&["extend", "k2.ext.json", "--twisted"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 6);

    let o = run(&["extend", "trivial.ext.json"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 3);

    let o = run(&["--format=json", "extend", "k2.ext.json", "--twisted"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["characters"].as_array().unwrap().len(), 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = run(&["extend", "pf4.ext.json", "--twisted"]);
    let b = run(&["extend", "pf4.ext.json", "--twisted"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fuse_sectors() {
    let o = run(&["fuse", "k2.ext.json", "(i1,1)", "(i1,1)"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "(i0,0):1 (i0,2):1");

    let o = run(&["fuse", "k2.ext.json", "(i1,3)", "(i1,1)"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("(i1,1)"), "{}", stderr(&o));

    let o = run(&["fuse", "k2.ext.json", "(i1,0)", "(i1,1)"]);
    assert_eq!(code(&o), 1, "twisted input");
}

#[test]
fn build_ring_and_derive_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.ring.json");
    let o = run(&["build-ring", "k2.ext.json", "--out", u.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let ring: Ring = io::ring_from_json(&std::fs::read_to_string(&u).unwrap()).unwrap();
    assert_eq!(ring.len(), 3);

    let w = dir.path().join("w.ring.json");
    let o = run(&[
        "derive",
        "sl2k2.inv.json",
        &format!("--out={}", w.display()),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let ising: Ring = io::ring_from_json(&std::fs::read_to_string(&w).unwrap()).unwrap();
    let mut weights: Vec<String> = ising.weights().iter().map(|h| h.to_string()).collect();
    weights.sort();
    assert_eq!(weights, ["0", "1/16", "1/2"]);
    assert_eq!(code(&run(&["check", w.to_str().unwrap()])), 0);
}

#[test]
fn deform_writes_the_z12_problem() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k2s1.ext.json");
    let o = run(&["deform", "k2.ext.json", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let p: Problem = io::extension_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(p.v().group().order(), 12);
    let o = run(&["deform", "k2.ext.json", "-1"]);
    assert_eq!(code(&o), 1);
    let o = run(&["deform", "k2.ext.json", "1"]);
    assert!(stdout(&o).contains("9 untwisted sectors"), "{}", stdout(&o));
}

#[test]
fn catalog_entries() {
    let o = run(&["catalog"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("k2.ext.json"));
    let o = run(&["--format", "json", "catalog", "sl2@2"]);
    let ring: Ring = io::ring_from_json(&stdout(&o)).unwrap();
    assert_eq!(ring.labels(), ["L0", "L1", "L2"]);
    let o = run(&["catalog", "parafermion@3"]);
    assert!(stdout(&o).starts_with("6 labels"), "{}", stdout(&o));
    let o = run(&["catalog", "lattice@2,1"]);
    assert!(stdout(&o).contains("1/8"));
    assert_eq!(code(&run(&["catalog", "e8@1"])), 2);
    assert_eq!(code(&run(&["catalog", "sl2@0"])), 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["--format=yaml", "check", "k2.ext.json"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}
