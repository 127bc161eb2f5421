use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use gsq_core::canon::is_isomorphic;
use gsq_core::corpus::{parse_graph6, write_graph6};
use gsq_core::families;
use gsq_core::graph::Graph;
use serde_json::Value;

fn gsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsq"))
        .args(args)
        .output()
        .expect("gsq runs")
}

fn gsq_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gsq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("gsq runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gsq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn f4_edges() -> PathBuf {
    let g = families::f4();
    scratch("f4.txt", &gsq_core::corpus::write_edge_list(&g))
}

#[test]
fn check_chordal_on_c4() {
    let file = scratch("c4.g6", "Cl\n");
    let o = gsq(&["check-chordal", "--json", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["chordal"], false);
    assert_eq!(v["hole"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn check_chordal_on_k4() {
    let file = scratch("k4.g6", "C~\n");
    let o = gsq(&["check-chordal", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chordal"));
}

#[test]
fn classify_f4() {
    let file = f4_edges();
    let o = gsq(&[
        "--format",
        "edges",
        "--json",
        "classify",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["claw_free"], true);
    assert_eq!(v["f4"].as_array().unwrap().len(), 1);
    assert_eq!(v["f4"][0]["suspended"], false);
    assert_eq!(v["sufficient_chordalsq"], false);
    assert_eq!(v["square_chordal"], false);
}

#[test]
fn witness_square_on_f4() {
    let file = f4_edges();
    let o = gsq(&[
        "--format",
        "edges",
        "--json",
        "witness",
        "square",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["flower"]["u"].as_array().unwrap().len(), 4);
    assert_eq!(v["flower"]["withered_by"], Value::Null);

    let o = gsq(&[
        "--format",
        "edges",
        "witness",
        "square",
        "--dot",
        file.to_str().unwrap(),
    ]);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("role=\"pending\""));
    assert!(dot.contains("role=\"w\""));
}

#[test]
fn witness_lgsquare_on_c6() {
    let file = scratch("c6.g6", &(write_graph6(&Graph::cycle(6)).unwrap() + "\n"));
    let o = gsq(&["--json", "witness", "lgsquare", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["sprout"]["u_edges"].as_array().unwrap().len(), 4);
    assert_eq!(v["sprout"]["infertile_by"], Value::Null);
}

#[test]
fn witness_on_a_chordal_square() {
    let o = gsq_stdin(&["witness", "square", "-"], "Ch\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn square_and_linegraph() {
    let c5 = scratch("c5.g6", &(write_graph6(&Graph::cycle(5)).unwrap() + "\n"));
    let o = gsq(&["square", "-k", "2", c5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let sq = parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(sq, Graph::complete(5));

    let o = gsq(&["--json", "linegraph", c5.to_str().unwrap()]);
    let v = json(&o);
    let lg = parse_graph6(v["graph"].as_str().unwrap()).unwrap();
    assert!(is_isomorphic(&lg, &Graph::cycle(5)).unwrap());
    assert_eq!(v["edge_of_vertex"][0], serde_json::json!([0, 1]));
}

#[test]
fn convert_round_trip() {
    let file = f4_edges();
    let o = gsq(&[
        "--format",
        "edges",
        "convert",
        "--to",
        "g6",
        file.to_str().unwrap(),
    ]);
    let g6 = stdout(&o);
    assert_eq!(parse_graph6(g6.trim()).unwrap(), families::f4());
    let o = gsq_stdin(&["convert", "--to", "edges", "-"], &g6);
    assert_eq!(stdout(&o), std::fs::read_to_string(&file).unwrap());
    let o = gsq_stdin(&["convert", "--to", "dot", "-"], &g6);
    assert!(stdout(&o).contains("4 -- 5;"));
}

#[test]
fn verify_exhaustive_is_clean_and_independent_of_jobs() {
    let one = gsq(&[
        "--json",
        "--jobs",
        "1",
        "verify",
        "--exhaustive",
        "5",
        "--theorems",
        "all",
    ]);
    let two = gsq(&[
        "--json",
        "--jobs",
        "2",
        "verify",
        "--exhaustive",
        "5",
        "--theorems",
        "all",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    let v = json(&one);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["graphs"], 52);
    for t in v["theorems"].as_array().unwrap() {
        assert_eq!(t["counterexamples"], 0, "{}", t["id"]);
    }
}

#[test]
fn verify_single_k4_file() {
    let file = scratch("k4-verify.g6", "C~\n");
    let o = gsq(&[
        "--json",
        "verify",
        "--file",
        file.to_str().unwrap(),
        "--theorems",
        "DIAMETER_COMPLETE",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["theorems"][0]["holds"], 1);
    assert_eq!(v["per_graph"][0]["verdicts"]["DIAMETER_COMPLETE"], "HOLDS");
}

#[test]
fn verify_reads_stdin() {
    let o = gsq_stdin(
        &[
            "--json",
            "verify",
            "--file",
            "-",
            "--connected",
            "--theorems",
            "cameron",
        ],
        "C~\nCl\nC?\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["graphs"], 2);
    assert_eq!(v["theorems"][0]["holds"], 1);
    assert_eq!(v["theorems"][0]["vacuous"], 1);
}

#[test]
fn verify_random_is_reproducible() {
    let args = [
        "--json",
        "verify",
        "--random",
        "9",
        "0.3",
        "30",
        "--seed",
        "42",
        "--theorems",
        "DUCHET,FLOTOW,BP_SUFFICIENT,NEW_SUFFICIENT,CAMERON",
    ];
    let a = gsq(&args);
    let b = gsq(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["graphs"], 30);
}

#[test]
fn mine_small_orders() {
    let o = gsq(&["--json", "mine", "square", "--nmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o), serde_json::json!([]));

    let o = gsq(&["--json", "mine", "lgsquare", "--nmax", "6"]);
    let found: Vec<Graph> = json(&o)
        .as_array()
        .unwrap()
        .iter()
        .map(|item| parse_graph6(item["graph6"].as_str().unwrap()).unwrap())
        .collect();
    let c6 = Graph::cycle(6);
    assert!(found.iter().any(|g| is_isomorphic(g, &c6).unwrap()));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(gsq(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gsq(&["verify", "--theorems", "all"]).status.code(), Some(2));
    assert_eq!(
        gsq(&["verify", "--exhaustive", "3", "--theorems", "NOPE"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gsq(&["check-chordal", "/nonexistent/graph.g6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gsq_stdin(&["check-chordal", "-"], "C\u{7f}\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gsq(&["mine", "square", "--nmax", "9"]).status.code(),
        Some(2)
    );
}
