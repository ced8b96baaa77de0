//! End-to-end runs of the binary: worked examples, trace output, file
//! input, JSON output, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn cisr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cisr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/data");
    path.push(name);
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_tropical_worked_example() {
    let out = cisr(&[
        "verify",
        "--instance",
        "tropical",
        "--alphas",
        "1,3",
        "--betas",
        "2,4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "R = 13, S = 13, EQUAL\n");
}

#[test]
fn resultant_power_set_worked_example() {
    let out = cisr(&[
        "resultant",
        "--instance",
        "powerset",
        "--universe",
        "1..5",
        "--alphas",
        "[1,2],[3,4]",
        "--betas",
        "[2,3],[4,5]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "∅\n");
}

#[test]
fn verify_cofinite_worked_example() {
    let out = cisr(&[
        "verify",
        "--instance",
        "cofinite",
        "--alphas",
        "R\\{0,1},R\\{0,2}",
        "--betas",
        "R\\{0,-1},R\\{0,-2}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "R = R\\{0}, S = R\\{0}, EQUAL\n");
}

#[test]
fn verify_polygon_worked_example() {
    let out = cisr(&[
        "verify",
        "--instance",
        "polygon",
        "--alphas",
        "(0,0),(0,0);(1,0)",
        "--betas",
        "(0,0),(0,0);(0,1)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let pentagon = "(0,0);(2,0);(2,1);(1,2);(0,2)";
    assert_eq!(
        stdout(&out),
        format!("R = {pentagon}, S = {pentagon}, EQUAL\n")
    );
}

#[test]
fn verify_single_roots_any_instance() {
    let out = cisr(&[
        "verify",
        "--instance",
        "ideal",
        "--alphas",
        "v-1",
        "--betas",
        "v+1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "R = <1>, S = <1>, EQUAL\n");
}

#[test]
fn verify_sequences_as_json() {
    let out = cisr(&[
        "verify",
        "--instance",
        "sequences",
        "--inner",
        "boolean",
        "--len",
        "16",
        "--alphas",
        "s1,s2",
        "--betas",
        "s3,s4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["instance"], "sequences");
    assert_eq!(parsed["params"]["len"], 16);
    assert_eq!(parsed["alphas"], serde_json::json!(["s1", "s2"]));
    assert_eq!(parsed["result"]["resultant"], "s14");
    assert_eq!(parsed["result"]["equal"], true);
}

#[test]
fn json_values_reparse_to_the_same_results() {
    // Round-trip through the printed literals: recomputing from the
    // echoed alphas and betas reproduces the same result string.
    let first = cisr(&[
        "resultant",
        "--instance",
        "termset",
        "--dims",
        "2,2",
        "--alphas",
        "a(1,0)b(0,0),a(0,1)b(0,0)",
        "--betas",
        "a(0,0)b(1,0),a(0,0)b(0,1)",
        "--format",
        "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    let alphas: Vec<String> = parsed["alphas"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    let betas: Vec<String> = parsed["betas"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    let second = cisr(&[
        "resultant",
        "--instance",
        "termset",
        "--dims",
        "2,2",
        "--alphas",
        &alphas.join(","),
        "--betas",
        &betas.join(","),
        "--format",
        "json",
    ]);
    let reparsed: serde_json::Value = serde_json::from_str(&stdout(&second)).unwrap();
    assert_eq!(parsed["result"], reparsed["result"]);
}

#[test]
fn permanent_of_tropical_matrix_file() {
    let out = cisr(&[
        "permanent",
        "--instance",
        "tropical",
        &data("tropical_4x4.txt"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "13\n");
}

#[test]
fn permanent_rejects_non_square_file() {
    let out = cisr(&[
        "permanent",
        "--instance",
        "tropical",
        &data("not_square.txt"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("square"), "{err}");
}

#[test]
fn rep_syl_from_res_reproduces_worked_pair() {
    let out = cisr(&["rep", "syl-from-res", &data("worked_res_rep.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "S1:\n1 0 1 1\n1 1 0 1\n1 1 0 1\n0 0 1 1\n0 1 1 0\n\
         S2:\n0 0 0 0\n0 0 0 0\n0 0 0 0\n1 1 1 0\n1 1 1 1\n"
    );
}

#[test]
fn rep_res_from_syl_trace_reproduces_worked_swaps() {
    let out = cisr(&[
        "rep",
        "res-from-syl",
        &data("worked_s1.txt"),
        &data("worked_s2.txt"),
        "--trace",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "SWAP S1 (3,3) <-> (3,4)\n\
         SWAP S2 (3,1) <-> (4,1)\n\
         SWAP S2 (2,2) <-> (3,2)\n\
         SWAP S2 (3,2) <-> (4,2)\n\
         SWAP S1 (1,1) <-> (1,2)\n\
         SWAP S2 (3,3) <-> (4,3)\n\
         SWAP S1 (2,1) <-> (2,3)\n\
         R:\n1 0 1 1\n1 1 0 1\n1 1 0 1\n0 0 1 1\n0 1 1 0\n"
    );
}

#[test]
fn rep_sort_then_flush_matches_combined_run() {
    let sort = cisr(&[
        "rep",
        "sort",
        &data("worked_s1.txt"),
        &data("worked_s2.txt"),
        "--trace",
    ]);
    assert_eq!(sort.status.code(), Some(0));
    let text = stdout(&sort);
    assert!(text.starts_with("SWAP S1 (3,3) <-> (3,4)\nSWAP S2 (3,1) <-> (4,1)\n"));
    assert!(text.contains("S2:\n0 0 0 0\n0 1 0 0\n0 0 1 0\n1 0 0 0\n1 1 1 1\n"));
}

#[test]
fn rep_flush_rejects_unsorted_input() {
    let out = cisr(&[
        "rep",
        "flush",
        &data("worked_s1.txt"),
        &data("worked_s2.txt"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("not sorted") || err.contains("increasing"),
        "{err}"
    );
}

#[test]
fn rep_enumerate_counts_worked_term() {
    let out = cisr(&["rep", "enumerate", "--mu", "2,1,1", "--nu", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "res-reps: 2\nsyl-reps: 6\n");
}

#[test]
fn axioms_over_builtin_pool() {
    let out = cisr(&["axioms", "--instance", "tropical"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("all axioms hold"), "{text}");
    assert!(text.contains("distributive"), "{text}");
}

#[test]
fn axioms_with_explicit_samples() {
    let out = cisr(&[
        "axioms",
        "--instance",
        "tropical",
        "--samples",
        "-inf,0,1,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all axioms hold"));
}

#[test]
fn sweep_single_instance() {
    let out = cisr(&[
        "sweep",
        "--instance",
        "boolean",
        "--max-m",
        "2",
        "--max-n",
        "2",
        "--draws",
        "3",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "boolean: 12/12 equal\n");
}

#[test]
fn parse_errors_exit_2() {
    let out = cisr(&[
        "verify",
        "--instance",
        "tropical",
        "--alphas",
        "banana",
        "--betas",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));

    let out = cisr(&[
        "verify",
        "--instance",
        "nosuch",
        "--alphas",
        "1",
        "--betas",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_required_flags_exit_2() {
    let out = cisr(&["verify", "--instance", "tropical"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn powerset_params_alternative_spelling() {
    let out = cisr(&[
        "resultant",
        "--instance",
        "powerset",
        "--params",
        "universe=1..5",
        "--alphas",
        "[1,2],[3,4]",
        "--betas",
        "[2,3],[4,5]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "∅\n");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "verify",
        "--instance",
        "polygon",
        "--alphas",
        "(0,0);(1,0),(0,0);(0,1),(1/2,1/2)",
        "--betas",
        "(0,0),(-1,-1);(2,0)",
        "--format",
        "json",
    ];
    let first = cisr(&args);
    let second = cisr(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}
