//! End-to-end tests of the `parkfn` binary: golden outputs, pipe roundtrips,
//! exit codes, and byte-stable JSON re-serialization.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const FIG2: &str = r#"{"n":4,"edges":[[0,1,2],[1,2,2],[2,3,2],[2,4,1],[3,4,1],[0,4,3]]}"#;

fn parkfn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkfn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn parkfn_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_parkfn"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn poly_main_renders_canonical_text() {
    let out = parkfn(&["poly", "--formula", "main", "--x", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2 + q");
}

#[test]
fn burn_vector_matches_golden_triple() {
    let out = parkfn(&[
        "burn", "--mode", "vector", "--x", "1,3,1", "--alpha", "2,0,2", "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["ok"], serde_json::json!(true));
    assert_eq!(v["tree"]["parent"], serde_json::json!([0, 1, 1]));
    assert_eq!(v["order"]["sequence"], serde_json::json!([3, 1, 2]));
    assert_eq!(v["labels"], serde_json::json!([[0, 1, 0], [1, 2, 1], [1, 3, 1]]));
}

#[test]
fn burn_then_unburn_pipes_back_to_input() {
    let out = parkfn(&[
        "burn", "--mode", "vector", "--x", "1,3,1", "--alpha", "2,0,2", "--output", "json",
    ]);
    let triple = stdout(&out);
    let back = parkfn_stdin(
        &["unburn", "--mode", "vector", "--x", "1,3,1", "--input", "-"],
        &triple,
    );
    assert_eq!(back.status.code(), Some(0), "{}", String::from_utf8_lossy(&back.stderr));
    assert_eq!(stdout(&back).trim(), "[2,0,2]");
}

#[test]
fn multigraph_burn_unburn_roundtrip() {
    let out = parkfn(&[
        "burn", "--mode", "multigraph", "--graph", FIG2, "--order", "1,2,3,4", "--alpha",
        "1,2,0,0", "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["tree"]["parent"], serde_json::json!([2, 4, 4, 0]));
    assert_eq!(
        v["labels"],
        serde_json::json!([[2, 1, 0], [4, 2, 0], [4, 3, 0], [0, 4, 2]])
    );
    let back = parkfn_stdin(
        &[
            "unburn", "--mode", "multigraph", "--graph", FIG2, "--order", "1,2,3,4", "--input",
            "-",
        ],
        &stdout(&out),
    );
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(stdout(&back).trim(), "[1,2,0,0]");
}

#[test]
fn trace_matches_golden_file() {
    let out = parkfn(&[
        "burn", "--mode", "multigraph", "--graph", FIG2, "--order", "1,2,3,4", "--alpha",
        "1,2,0,0", "--trace", "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let trace_lines: Vec<&str> = text.lines().take_while(|l| l.contains("\"event\"")).collect();
    let golden = include_str!("golden/fig2_trace.jsonl");
    let golden_lines: Vec<&str> = golden.lines().collect();
    assert_eq!(trace_lines, golden_lines);
    // ignition order after the root is 4, 3, 2, 1
    let ignitions: Vec<&str> = trace_lines
        .iter()
        .filter(|l| l.contains("ignite"))
        .copied()
        .collect();
    assert_eq!(ignitions.len(), 5);
    assert!(ignitions[1].contains("\"vertex\":4"));
    assert!(ignitions[4].contains("\"vertex\":1"));
}

#[test]
fn burn_failure_exits_one_with_certificate() {
    let out = parkfn(&[
        "burn", "--mode", "vector", "--x", "1,1", "--alpha", "1,1", "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["ok"], serde_json::json!(false));
    assert!(!v["certificate"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_json_exits_two() {
    let out = parkfn(&["classify", "--graph", "{not json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn usage_error_exits_two() {
    let out = parkfn(&["burn", "--mode", "nonsense", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suite_passes_and_reports_json() {
    let out = parkfn(&[
        "verify", "eq1", "--max-n", "3", "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v[0]["identity"], "eq1");
    assert_eq!(v[0]["instances"], 3);
    assert_eq!(v[0]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_spec_example_thm17() {
    let out = parkfn(&["verify", "thm1.7", "--max-n", "3", "--x-range", "3", "--random-x", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = parkfn(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_examples() {
    let out = parkfn(&[
        "classify", "--graph", r#"{"n":3,"edges":[[0,1,2],[1,2,2],[2,3,2],[0,3,2]]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["tag"], "ACycle");
    assert_eq!(v["a"], 2);
    assert_eq!(v["x"], serde_json::json!([2, 0, 2]));

    let out = parkfn(&[
        "classify", "--graph", r#"{"n":2,"edges":[[0,1,1],[1,2,2]]}"#,
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["tag"], "NotInvariant");
}

#[test]
fn enumerate_and_count() {
    let out = parkfn(&["enumerate", "--kind", "vector", "--x", "1,1"]);
    assert_eq!(stdout(&out), "[0,0]\n[0,1]\n[1,0]\n");

    let out = parkfn(&["enumerate", "--kind", "increasing", "--x", "1,1"]);
    assert_eq!(stdout(&out), "[0,0]\n[0,1]\n");

    let out = parkfn(&["enumerate", "--kind", "maximal-vector", "--x", "1,3,1"]);
    assert_eq!(stdout(&out).lines().count(), 6);

    let out = parkfn(&[
        "enumerate", "--kind", "maximal-graphical", "--graph",
        r#"{"n":2,"edges":[[0,1,1],[0,2,1],[1,2,1]]}"#,
    ]);
    assert_eq!(stdout(&out), "[0,1]\n[1,0]\n");

    let out = parkfn(&["count", "--x", "1,3,1", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["pitman_stanley"], "58");
    assert_eq!(v["corollary"], "58");
}

#[test]
fn poly_formula_variants() {
    let out = parkfn(&["poly", "--formula", "inversion", "--n", "3"]);
    assert_eq!(stdout(&out).trim(), "6 + 6*q + 3*q^2 + q^3");

    let inc = parkfn(&["poly", "--formula", "increasing-pf", "--x", "2,1"]);
    let par = parkfn(&["poly", "--formula", "increasing-partition", "--x", "2,1"]);
    assert_eq!(stdout(&inc), stdout(&par));
    assert_eq!(stdout(&inc).trim(), "1 + 2*q + q^2 + q^3");

    // missing required argument for the formula is a usage error
    let out = parkfn(&["poly", "--formula", "inversion"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unburn_multigraph_with_explicit_flags() {
    let out = parkfn(&[
        "unburn", "--mode", "multigraph", "--graph", FIG2, "--order", "1,2,3,4", "--tree",
        r#"{"n":4,"parent":[2,4,4,0]}"#, "--labels", "0,0,0,2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).trim(), "[1,2,0,0]");
}

#[test]
fn json_reserialization_is_byte_stable() {
    // graph, tree, order, and polynomial JSON forms re-serialize identically
    let graph_json = stdout(&parkfn(&["classify", "--graph", FIG2]));
    let v: serde_json::Value = serde_json::from_str(graph_json.trim()).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), graph_json.trim());

    let poly = stdout(&parkfn(&[
        "poly", "--formula", "vector-brute", "--x", "1,3,1", "--output", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(poly.trim()).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), poly.trim());
    let burn = stdout(&parkfn(&[
        "burn", "--mode", "vector", "--x", "1,3,1", "--alpha", "2,0,2", "--output", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(burn.trim()).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), burn.trim());
}

#[test]
fn vectors_accepted_from_files() {
    let dir = std::env::temp_dir().join(format!("parkfn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let x_path = dir.join("x.json");
    std::fs::write(&x_path, "[1,3,1]").unwrap();
    let arg = format!("@{}", x_path.display());
    let out = parkfn(&["count", "--x", &arg]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pitman_stanley = 58"));
    std::fs::remove_dir_all(&dir).ok();
}
