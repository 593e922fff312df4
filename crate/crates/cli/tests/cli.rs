//! End-to-end tests of the binary: output grammar, exit codes, determinism.

use std::process::{Command, Output};

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn expand_star_example() {
    let out = mzv(&["expand", "star", "[2]", "[3]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[5]:1, [2,3]:1, [3,2]:1");
}

#[test]
fn expand_d_example() {
    let out = mzv(&["expand", "d", "[2,2]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[4]:1, [2,2]:1");
}

#[test]
fn expand_sha_unit_example() {
    let out = mzv(&["expand", "sha", "[]", "[3]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[3]:1");
}

#[test]
fn expand_parse_error_exits_2() {
    let out = mzv(&["expand", "star", "[2", "[3]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("parse error"), "stderr: {err}");
}

#[test]
fn verify_small_grid_passes_and_is_deterministic_across_jobs() {
    let args = [
        "verify", "mthm", "--a", "1..2", "--b", "1..2", "--c", "1", "--m", "0..2", "--n", "0..1",
    ];
    let one = mzv(&[&args[..], &["--jobs", "1"]].concat());
    let four = mzv(&[&args[..], &["--jobs", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(stdout(&one), stdout(&four), "--jobs changed the output");

    let first = stdout(&one).lines().next().unwrap().to_string();
    let record: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(record["identity"], "mthm");
    assert_eq!(record["pass"], true);
    assert_eq!(record["diff"], "0");
}

#[test]
fn verify_informal_and_in_a() {
    let out = mzv(&["verify", "informal", "--W", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);

    let out = mzv(&["verify", "inA", "--m", "0..1", "--n", "0..1"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["pass"], true);
    }
}

#[test]
fn verify_oracles_runs() {
    let out = mzv(&[
        "verify", "oracles", "--depth", "2", "--entry", "2", "--random", "5", "--a", "2", "--b",
        "1", "--c", "1", "--m", "0..1", "--n", "0..1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("oracles.star"));
    assert!(text.contains("oracles.d_phi"));
    assert!(text.contains("oracles.hom"));
}

#[test]
fn eval_index_reconstructs_even_zeta() {
    let out = mzv(&["eval", "--index", "[2]", "--pi-power", "2"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["reconstructed"], "1/6");
    assert!(record["value"].as_str().unwrap().starts_with("1.64493406"));
}

#[test]
fn eval_rejects_divergent_index() {
    let out = mzv(&["eval", "--index", "[1,2]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("not admissible"), "stderr: {err}");
}

#[test]
fn eval_poly_and_star_routes_agree() {
    let via_poly = mzv(&["eval", "--poly", "[4]:1, [3,1]:1", "--pi-power", "4"]);
    let via_star = mzv(&["eval", "--index", "[3,1]", "--star", "--pi-power", "4"]);
    assert!(via_poly.status.success() && via_star.status.success());
    let p: serde_json::Value = serde_json::from_str(stdout(&via_poly).trim()).unwrap();
    let s: serde_json::Value = serde_json::from_str(stdout(&via_star).trim()).unwrap();
    assert_eq!(p["reconstructed"], "1/72");
    assert_eq!(s["reconstructed"], "1/72");
}

#[test]
fn eval_reads_poly_files() {
    let dir = std::env::temp_dir().join("mzv-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("poly.txt");
    std::fs::write(&path, "[2]:1\n").unwrap();
    let out = mzv(&["eval", "--poly-file", path.to_str().unwrap(), "--pi-power", "2"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["reconstructed"], "1/6");
}

#[test]
fn bb_examples() {
    let out = mzv(&["bb", "--m", "0", "--n", "1", "--err", "1e-10", "--pi-power", "4"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["reconstructed"], "1/72");
    assert_eq!(record["pi_power"], 4);

    // default pi power is 2m + 4n
    let out = mzv(&["bb", "--m", "1", "--n", "0"]);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["reconstructed"], "1/6");
    assert_eq!(record["pi_power"], 2);
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = mzv(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
