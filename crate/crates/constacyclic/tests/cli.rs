//! End-to-end checks of the command-line interface: output shapes, the
//! documented exit codes, and stdin-driven descriptor flows.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_constacyclic"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_with_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn factor_emits_the_known_tower() {
    let (code, stdout, _) = run(&["factor", "--ring", "Z/4", "--n", "7", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["ring"], "Z/4");
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);
    assert_eq!(v["factors"][0], serde_json::json!([3, 1]));
}

#[test]
fn construct_check_dual_roundtrip_through_stdin() {
    let (code, descriptor, _) = run(&["construct", "--ring", "Z/4", "--n", "7", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&descriptor).unwrap();
    assert_eq!(v["cardinality"], "128");
    assert_eq!(v["self_dual"], true);

    let (code, stdout, _) = run_with_stdin(&["check", "-"], &descriptor);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "ok");

    let (code, dual_out, _) = run_with_stdin(&["dual", "-", "--json"], &descriptor);
    assert_eq!(code, 0);
    let d: serde_json::Value = serde_json::from_str(&dual_out).unwrap();
    assert_eq!(d["levels"], v["levels"], "a self-dual code equals its dual");
}

#[test]
fn check_reports_semantic_diffs_with_exit_one() {
    let (_, descriptor, _) = run(&["construct", "--ring", "Z/4", "--n", "7", "--json"]);
    let tampered = descriptor.replace("\"128\"", "\"64\"");
    let (code, stdout, _) = run_with_stdin(&["check", "-"], &tampered);
    assert_eq!(code, 1);
    assert!(stdout.contains("mismatch"));
    assert!(stdout.contains("cardinality"));
}

#[test]
fn domain_errors_exit_two() {
    let (code, _, stderr) = run(&["factor", "--ring", "Z/4", "--n", "6"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("coprime"));

    let (code, _, stderr) = run(&["construct", "--ring", "Z/8", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no such code"));
}

#[test]
fn malformed_descriptors_exit_three() {
    let (code, _, stderr) = run_with_stdin(&["check", "-"], "{ not json");
    assert_eq!(code, 3);
    assert!(stderr.contains("malformed"));

    let (code, _, stderr) = run(&["factor", "--ring", "Z/12", "--n", "5"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("malformed"));
}

#[test]
fn verdict_and_census_read_the_same_story() {
    let (code, stdout, _) = run(&["verdict", "--ring", "Z/4", "--n", "7", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["status"], "NONTRIVIAL_EXISTS");
    assert_eq!(v["decided_by"], "ORD_PARITY");

    let (code, stdout, _) = run(&["census", "--grid", "Z/4;7..7", "--json"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(rows[0]["status"], "NONTRIVIAL_EXISTS");
    assert_eq!(rows[0]["witness"], serde_json::json!({ "asymmetric_coset": 1 }));
}

#[test]
fn census_json_is_deterministic() {
    let args = ["census", "--grid", "Z/4,Z/9;2..9", "--construct", "--json"];
    let (code_a, a, _) = run(&args);
    let (code_b, b, _) = run(&args);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(a, b, "byte-identical output on repeated runs");
}

#[test]
fn oracle_reports_the_z4_cubic_census() {
    let (code, stdout, _) = run(&["oracle", "--ring", "Z/4", "--n", "3", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["codes_found"], 9);
    assert_eq!(v["self_dual_count"], 1);
    assert_eq!(v["self_dual_level_maps"], serde_json::json!([[[1, 1]]]));
}

#[test]
fn mu_twists_a_cyclic_code() {
    let descriptor = r#"{"ring":"F5","n":2,"lambda":1,"factors":["x + 1","x + 4"],
      "levels":[0,1],"cardinality":"5","self_dual":false}"#;
    let (code, stdout, _) = run_with_stdin(&["mu", "-", "--delta", "2", "--json"], descriptor);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["lambda"], 4);
    assert_eq!(v["cardinality"], "5");
}

#[test]
fn crt_glues_component_descriptors() {
    let pair = r#"[
      {"ring":"F3","n":2,"lambda":2,"factors":[[1,0,1]],"levels":[0],
       "cardinality":"9","self_dual":false},
      {"ring":"F3","n":2,"lambda":1,"factors":["x + 1","x + 2"],"levels":[0,1],
       "cardinality":"3","self_dual":false}
    ]"#;
    let (code, stdout, _) = run_with_stdin(&["crt", "--ring", "F3 + vF3", "-", "--json"], pair);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["ring"], "F3 + vF3");
    assert_eq!(v["cardinality"], "27");
    assert_eq!(v["lambda"], serde_json::json!([2, 1]));
}

#[test]
fn table_and_json_flags_conflict() {
    let (code, _, stderr) = run(&["factor", "--ring", "Z/4", "--n", "7", "--json", "--table"]);
    assert_eq!(code, 2, "clap rejects the flag combination");
    assert!(!stderr.is_empty());
}
