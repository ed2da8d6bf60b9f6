//! End-to-end checks of the binary: exit codes, text/JSON agreement, and the
//! documented schemas.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mextremal"))
}

fn write_graph(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const C5: &str = "n 5\nr 2\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 0 4 2\n";
const RB_PATH: &str = "n 3\nr 2\ne 0 1 1\ne 1 2 2\n";

#[test]
fn chi_text_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(&dir, "c5.cg", C5);
    let text = bin().arg("chi").arg(&c5).output().unwrap();
    assert!(text.status.success());
    assert_eq!(stdout(&text).trim(), "chi = 3");
    let json = bin()
        .args(["--format", "json", "chi"])
        .arg(&c5)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(v["schema"], "mextremal/chi/v1");
    assert_eq!(v["chi"], 3);
}

#[test]
fn missing_file_exits_one() {
    let out = bin().args(["chi", "/nonexistent/g.cg"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/g.cg"));
}

#[test]
fn unknown_flag_exits_two() {
    let out = bin().args(["chi", "--no-such-flag", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_graph_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_graph(&dir, "bad.cg", "n 2\nr 2\ne 0 1 9\n");
    let out = bin().arg("chi").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("color"));
}

#[test]
fn mex_reports_value_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_graph(&dir, "rbpath.cg", RB_PATH);
    let out = bin()
        .args(["mex", "--n", "4", "--r", "2"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("T = 1"), "got {text}");

    let out = bin()
        .args(["--format", "json", "mex", "--n", "4", "--r", "2"])
        .arg(&path)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["schema"], "mextremal/mex/v1");
    assert_eq!(v["value"], 1);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["witness"]["n"], 4);
}

#[test]
fn redmm_value_matches_json() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(&dir, "c5.cg", C5);
    let text = bin().arg("redmm").arg(&c5).output().unwrap();
    assert!(stdout(&text).contains("M = 1"));
    let json = bin()
        .args(["--format", "json", "redmm"])
        .arg(&c5)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(v["m"], 1);
}

#[test]
fn bounds_reports_exact_rational() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(&dir, "c5.cg", C5);
    let out = bin()
        .args(["--format", "json", "bounds"])
        .arg(&c5)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["theorem_upper"]["num"], 241);
    assert_eq!(v["theorem_upper"]["den"], 324);
}

#[test]
fn construct_blowup_contains_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = bin().args(["construct", "t2"]).output().unwrap();
    let t2_path = write_graph(&dir, "t2.cg", &stdout(&t2));
    let blown = bin()
        .arg("blowup")
        .arg(&t2_path)
        .args(["--s", "5"])
        .output()
        .unwrap();
    let host = write_graph(&dir, "host.cg", &stdout(&blown));
    let c5 = write_graph(&dir, "c5.cg", C5);
    let out = bin()
        .args(["--format", "json", "contains"])
        .arg(&host)
        .arg(&c5)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["found"], true);

    let out = bin()
        .args(["--format", "json", "hom"])
        .arg(&c5)
        .arg(&t2_path)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["found"], true);
}

#[test]
fn construct_family_emits_json_graph() {
    let out = bin()
        .args([
            "--format", "json", "construct", "family", "--r", "2", "--k", "3", "--m", "1",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 10);
}

#[test]
fn construct_family_odd_r_exits_one() {
    let out = bin()
        .args(["construct", "family", "--r", "3", "--k", "3", "--m", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_gadget_modes() {
    let out = bin()
        .args(["construct", "gadget", "--builtin", "perm3"])
        .output()
        .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = write_graph(&dir, "g.cg", &stdout(&out));
    let pass = bin()
        .arg("verify-gadget")
        .arg(&path)
        .args(["--s", "2", "--exact"])
        .output()
        .unwrap();
    assert_eq!(stdout(&pass).trim(), "pass");
    let sampled = bin()
        .args(["--format", "json", "verify-gadget"])
        .arg(&path)
        .args(["--s", "1", "--trials", "50", "--seed", "3"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&sampled).trim()).unwrap();
    assert_eq!(v["pass"], false);
}

#[test]
fn pipeline_finds_blow_up_target() {
    let dir = tempfile::tempdir().unwrap();
    // Target: 3 vertices, red single on {0,1}, doubles elsewhere; host is its
    // 3-blow-up.
    let target = "n 3\nr 2\ne 0 1 1\ne 0 2 1\ne 0 2 2\ne 1 2 1\ne 1 2 2\n";
    let t_path = write_graph(&dir, "p.cg", target);
    let blown = bin()
        .arg("blowup")
        .arg(&t_path)
        .args(["--s", "3"])
        .output()
        .unwrap();
    let host = write_graph(&dir, "host.cg", &stdout(&blown));
    let out = bin()
        .args(["--format", "json", "pipeline"])
        .arg(&host)
        .args(["--k", "2", "--matching", "1", "--rounds", "10", "--seed", "1"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["schema"], "mextremal/pipeline/v1");
    assert_eq!(v["found"], true);
    assert_eq!(v["map"].as_array().unwrap().len(), 3);
}

#[test]
fn pipeline_accepts_fixed_partition() {
    let dir = tempfile::tempdir().unwrap();
    let target = "n 3\nr 2\ne 0 1 1\ne 0 2 1\ne 0 2 2\ne 1 2 1\ne 1 2 2\n";
    let t_path = write_graph(&dir, "p.cg", target);
    let blown = bin()
        .arg("blowup")
        .arg(&t_path)
        .args(["--s", "2"])
        .output()
        .unwrap();
    let host = write_graph(&dir, "host.cg", &stdout(&blown));
    // Classes {0,1,2,3} (the two single-pair sides) and {4,5}.
    let out = bin()
        .args(["--format", "json", "pipeline"])
        .arg(&host)
        .args([
            "--k", "2", "--matching", "1", "--rounds", "8", "--seed", "1",
            "--partition", "0,1,2,3;4,5",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["found"], true);
    assert_eq!(v["trace"]["source"], "Provided");

    // A partition that buries a full-multiplicity pair inside a class fails.
    let bad = bin()
        .arg("pipeline")
        .arg(&host)
        .args(["--k", "2", "--matching", "1", "--partition", "0,4;1,2,3,5"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn tightness_text_and_json_agree() {
    let text = bin()
        .args(["tightness", "--r", "2", "--k", "20", "--m", "2"])
        .output()
        .unwrap();
    assert!(stdout(&text).contains("29/30"));
    let json = bin()
        .args(["--format", "json", "tightness", "--r", "2", "--k", "20", "--m", "2"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(v["construction_lower"]["num"], 29);
    assert_eq!(v["construction_lower"]["den"], 30);
    assert_eq!(v["holds"], true);
    let violation = bin()
        .args(["tightness", "--r", "2", "--k", "10", "--m", "2"])
        .output()
        .unwrap();
    assert_eq!(violation.status.code(), Some(1));
}

#[test]
fn threads_flag_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_graph(&dir, "rbpath.cg", RB_PATH);
    let out = bin()
        .args(["--threads", "1", "mex", "--n", "4", "--r", "2"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("T = 1"));
}
