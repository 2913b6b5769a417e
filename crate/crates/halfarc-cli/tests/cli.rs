//! End-to-end tests of the binary's exit codes and output contract.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_halfarc"))
}

fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/examples")
        .join(file)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_d8_passes() {
    let out = bin().args(["verify", "d8"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("CHECK generation PASS"), "{text}");
    assert!(text.contains("CHECK conclusion PASS"), "{text}");
}

#[test]
fn verify_family_m4_passes_and_m3_is_usage_error() {
    let ok = bin().args(["verify", "d8c2", "--m", "4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    let bad = bin().args(["verify", "d8c2", "--m", "3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_conjecture_requires_m() {
    let out = bin().args(["verify", "conjecture"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let ok = bin().args(["verify", "conjecture", "--m", "7"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    assert!(stdout(&ok).contains("VERDICT"), "{}", stdout(&ok));
}

#[test]
fn report_flag_is_line_oriented() {
    let out = bin().args(["verify", "d8", "--report"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        assert!(line.starts_with("CHECK "), "{line}");
    }
}

#[test]
fn build_graph_cayley_of_s3() {
    let out = bin()
        .args(["build-graph"])
        .arg(data("s3_group.grp"))
        .arg(data("s3_trivial.grp"))
        .arg(data("s3_cayley_reps.grp"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("vertices 6 valency 3 connected true"), "{}", stdout(&out));
}

#[test]
fn build_graph_rejects_one_sided_reps() {
    let dir = std::env::temp_dir().join("halfarc-cli-test-reps");
    fs::create_dir_all(&dir).unwrap();
    let reps = dir.join("one_sided.grp");
    fs::write(&reps, "degree 3\n(1,2,3)\n").unwrap();
    let out = bin()
        .args(["build-graph"])
        .arg(data("s3_group.grp"))
        .arg(data("s3_trivial.grp"))
        .arg(&reps)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("S not inverse-closed"), "{}", stderr(&out));
}

#[test]
fn build_graph_shortcut_and_missing_files() {
    let over = bin()
        .args(["build-graph", "--example-d8", "--max-vertices", "100"])
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(1));
    assert!(stderr(&over).contains("raise --max-vertices"), "{}", stderr(&over));

    let missing = bin().args(["build-graph"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn concentric_presets() {
    let h7 = bin().args(["concentric", "H7"]).output().unwrap();
    assert_eq!(h7.status.code(), Some(0), "{}", stderr(&h7));
    assert!(stdout(&h7).contains("verdict true"), "{}", stdout(&h7));

    let c24 = bin().args(["concentric", "C2^4"]).output().unwrap();
    assert_eq!(c24.status.code(), Some(0));
    assert!(stdout(&c24).contains("verdict true"));

    let q8 = bin().args(["concentric", "Q8", "--search"]).output().unwrap();
    assert_eq!(q8.status.code(), Some(0), "{}", stderr(&q8));
    assert!(stdout(&q8).contains("none exists (exhaustive)"), "{}", stdout(&q8));

    let tiny = bin()
        .args(["concentric", "D8", "--search", "--budget", "2"])
        .output()
        .unwrap();
    assert_eq!(tiny.status.code(), Some(1));
    assert!(stderr(&tiny).contains("raise --budget"), "{}", stderr(&tiny));
}

#[test]
fn quotient_hexagon_by_rotation() {
    let dir = std::env::temp_dir().join("halfarc-cli-test-quotient");
    fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("hexagon.graph");
    fs::write(&graph, "vertices 6 valency 2\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n").unwrap();
    let rot = dir.join("rotation.grp");
    fs::write(&rot, "degree 6\n(1,4)(2,5)(3,6)\n").unwrap();
    let out_file = dir.join("triangle.graph");

    let out = bin()
        .args(["quotient"])
        .arg(&graph)
        .arg(&rot)
        .arg("--out")
        .arg(&out_file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("blocks 3 edges 3 cover-multiplicity constant: true"), "{text}");
    assert!(fs::read_to_string(&out_file).unwrap().contains("blocks 6"));

    // a non-automorphism is rejected with a witness edge
    let bad = dir.join("bad.grp");
    fs::write(&bad, "degree 6\n(1,2)\n").unwrap();
    let rejected = bin().args(["quotient"]).arg(&graph).arg(&bad).output().unwrap();
    assert_eq!(rejected.status.code(), Some(1));
    assert!(stderr(&rejected).contains("not an automorphism"), "{}", stderr(&rejected));
}
