use std::path::Path;

use finite_realization::cli::{run, EXIT_BAD_INPUT, EXIT_FAILED, EXIT_OK};
use finite_realization::Poset;
use tempfile::TempDir;

fn realize(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("realize").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_writes_poset_and_manifest() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("z2.json");
    let (code, stdout, _) = realize(&["build", "--group", "cyclic:2", "--out", path_str(&out)]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.contains("points 44"));
    let poset = Poset::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(poset.len(), 44);
    assert_eq!(poset.height(), 1);

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("z2.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["cardinality"], 44);
    assert_eq!(manifest["m"], 1);
}

#[test]
fn build_from_endomorphism_file() {
    let dir = TempDir::new().unwrap();
    let endo = dir.path().join("endo.json");
    std::fs::write(&endo, r#"{"endo": [0, 4, 2, 0, 4, 2]}"#).unwrap();
    let out = dir.path().join("x.json");
    let manifest = dir.path().join("m.json");
    let retraction = format!("file:{}", path_str(&endo));
    let (code, _, err) = realize(&[
        "build",
        "--group",
        "cyclic:6",
        "--retraction",
        &retraction,
        "--out",
        path_str(&out),
        "--manifest",
        path_str(&manifest),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let m: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&manifest).unwrap()).unwrap();
    assert_eq!(m["S1"], serde_json::json!([3]));
    assert_eq!(m["S2"], serde_json::json!([2]));
    assert_eq!(m["cardinality"], 210);
}

#[test]
fn build_symmetric_group() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("s3.json");
    let (code, stdout, _) = realize(&["build", "--group", "symmetric:3", "--out", path_str(&out)]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.contains("points 210"));
}

#[test]
fn verify_passes_and_writes_report() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("report.json");
    let (code, stdout, _) = realize(&["verify", "--group", "dihedral:4", "--report", path_str(&report)]);
    assert_eq!(code, EXIT_OK, "{stdout}");
    assert!(stdout.contains("aut_x = 8"));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["counts"]["aut_x"], 8);
}

#[test]
fn verify_explicit_generators() {
    let (code, stdout, _) = realize(&["verify", "--group", "cyclic:6", "--retraction", "trivial", "--s1", "1"]);
    assert_eq!(code, EXIT_OK, "{stdout}");
    assert!(stdout.contains("aut_y = 1"));
}

#[test]
fn verify_trivial_group_fails_minimality() {
    let (code, stdout, _) = realize(&["verify", "--group", "cyclic:1"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(stdout.contains("[FAIL] (g)"));
}

#[test]
fn verify_height_zero() {
    let (code, stdout, _) = realize(&["verify", "--height0", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.contains("aut_x = 24"));
}

#[test]
fn bad_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let endo = dir.path().join("bad.json");
    // x ↦ 2x on Z4 is a homomorphism but not idempotent.
    std::fs::write(&endo, r#"{"endo": [0, 2, 0, 2]}"#).unwrap();
    let retraction = format!("file:{}", path_str(&endo));
    let (code, _, err) = realize(&["verify", "--group", "cyclic:4", "--retraction", &retraction]);
    assert_eq!(code, EXIT_BAD_INPUT);
    assert!(err.starts_with("error:"));

    assert_eq!(realize(&["verify", "--group", "cyclic:0"]).0, EXIT_BAD_INPUT);
    assert_eq!(
        realize(&["verify", "--group", "cyclic:4", "--s2", "2"]).0,
        EXIT_BAD_INPUT
    );
    assert_eq!(
        realize(&["verify", "--group", "cyclic:4", "--gens", "random"]).0,
        EXIT_BAD_INPUT
    );
    assert_eq!(realize(&["aut", "/nonexistent/poset.json"]).0, EXIT_BAD_INPUT);
    assert_eq!(realize(&["frobnicate"]).0, EXIT_BAD_INPUT);
}

#[test]
fn aut_core_and_dot_on_files() {
    let dir = TempDir::new().unwrap();
    let antichain = dir.path().join("a3.json");
    std::fs::write(&antichain, Poset::antichain(3).to_json()).unwrap();
    let (code, stdout, _) = realize(&["aut", path_str(&antichain)]);
    assert_eq!(code, EXIT_OK);
    let aut: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(aut["order"], 6);
    assert_eq!(aut["permutations"].as_array().unwrap().len(), 6);

    let chain = dir.path().join("c2.json");
    std::fs::write(&chain, Poset::chain(2).to_json()).unwrap();
    let (code, stdout, _) = realize(&["core", path_str(&chain)]);
    assert_eq!(code, EXIT_OK);
    let core: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(core["core"]["points"].as_array().unwrap().len(), 1);
    assert_eq!(core["trace"].as_array().unwrap().len(), 1);

    let gadget = dir.path().join("c.json");
    let (code, _, _) = realize(&["build", "--component", "2", "--out", path_str(&gadget)]);
    assert_eq!(code, EXIT_OK);
    let (code, dot, _) = realize(&["dot", path_str(&gadget)]);
    assert_eq!(code, EXIT_OK);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("rank=same").count(), 2);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 42);
}

#[test]
fn oracle_subcommand() {
    let (code, stdout, _) = realize(&["--seed", "3", "oracle-aut", "--count", "15", "--max-points", "6"]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.contains("15 posets (seed 3), 0 mismatches"));
}
