use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irregmix")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_irregmix"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn close(v: &Value, want: f64) -> bool {
    (v.as_f64().unwrap() - want).abs() < 1e-9
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("irregmix-cli-{}-{name}", std::process::id()))
}

#[test]
fn analyze_petersen() {
    let out = run(&["analyze", "--gen", "petersen"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["graph"]["n"], 10);
    assert!(close(&v["lambda1"], 3.0));
    assert!(close(&v["lambda"], 2.0));
    assert!(close(&v["gamma"], 1.0));
    assert_eq!(v["graph"]["regular"], true);
}

#[test]
fn analyze_complete_minus_edge_sigma() {
    let v = json(&run(&["analyze", "--gen", "complete_minus_edge:5"]));
    assert!(close(&v["sigma"], 0.5));
}

#[test]
fn schema_key_comes_first() {
    let out = run(&["analyze", "--gen", "cycle:5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_start().starts_with("{\n  \"schema\": 1,"), "{text}");
}

#[test]
fn weighted_mixing_is_tight_on_bowtie() {
    let out = run(&["eml", "--gen", "bowtie", "--theorem", "weighted", "--s", "0,1,2,3", "--t", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["theorem_id"], "WEIGHTED");
    assert_eq!(v["tight"], true);
    assert_eq!(v["violated"], false);
    assert!(close(&v["lhs"], v["rhs"].as_f64().unwrap()));
}

#[test]
fn negative_tolerance_reports_violation() {
    let out = run(&["eml", "--gen", "bowtie", "--theorem", "weighted", "--s", "0,1,2,3", "--t", "4", "--tol-slack", "-1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["violated"], true);
}

#[test]
fn sweep_has_no_violations_and_is_deterministic() {
    let args = ["eml", "--gen", "kite:3,4", "--sweep", "--seed", "7", "--samples", "500", "--max-exhaustive", "4"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["mode"]["kind"], "sampled");
    for t in v["theorems"].as_array().unwrap() {
        assert_eq!(t["violations"], 0, "{t}");
    }
    let other = run(&["eml", "--gen", "kite:3,4", "--sweep", "--seed", "8", "--samples", "500", "--max-exhaustive", "4"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn exhaustive_sweep_on_small_graph() {
    let v = json(&run(&["eml", "--gen", "path:5", "--sweep"]));
    assert_eq!(v["mode"]["kind"], "exhaustive");
    assert!(v["theorems"].as_array().unwrap().iter().all(|t| t["violations"] == 0));
}

#[test]
fn biregular_on_regular_graph_is_inapplicable() {
    let out = run(&["eml", "--gen", "petersen", "--theorem", "biregular", "--s", "0,1", "--t", "2,3"]);
    assert_eq!(code(&out), 3);
    assert!(!out.stderr.is_empty());
}

#[test]
fn zero_forcing_bounds_with_oracle() {
    let out = run(&["bounds", "--gen", "join:cocktail_party:3,complete:2", "--param", "zero-forcing", "--oracle"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let bounds = v["bounds"].as_array().unwrap();
    let ii = bounds.iter().find(|b| b["variant"] == "ii").unwrap();
    assert_eq!(ii["rounded"], 4);
    assert!(bounds.iter().all(|b| b["oracle"] == 6 && b["consistent"] == true));
}

#[test]
fn csv_bounds_have_header() {
    let out = run(&["--format", "csv", "bounds", "--gen", "petersen", "--param", "integrity"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("parameter,variant,value,rounded"));
    assert!(lines.any(|l| l.starts_with("integrity,REGULAR,")));
}

#[test]
fn k_independence_on_petersen() {
    let v = json(&run(&["bounds", "--gen", "petersen", "--param", "k-independence", "--k", "1"]));
    let reg = v["bounds"].as_array().unwrap().iter().find(|b| b["variant"] == "REGULAR").unwrap().clone();
    assert_eq!(reg["applicable"], true);
    assert!(reg["rounded"].as_i64().unwrap() >= 1);
}

#[test]
fn oracle_values() {
    let v = json(&run(&["oracle", "--gen", "complete_minus_edge:8", "--param", "zero-forcing"]));
    assert_eq!(v["value"], 6);
    let v = json(&run(&["oracle", "--gen", "petersen", "--param", "zero-forcing"]));
    assert_eq!(v["value"], 5);
    let v = json(&run(&["oracle", "--gen", "path:3", "--param", "routing"]));
    assert_eq!(v["value"], 3);
    let v = json(&run(&["oracle", "--gen", "petersen", "--param", "grundy"]));
    assert_eq!(v["value"], 5);
    assert_eq!(v["sequence"].as_array().unwrap().len(), 5);
}

#[test]
fn budget_exceeded_and_overridden() {
    let out = run(&["oracle", "--gen", "complete:16", "--param", "zero-forcing"]);
    assert_eq!(code(&out), 4);
    let out = run(&["oracle", "--gen", "complete:16", "--param", "zero-forcing", "--budget", "16"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["value"], 15);
}

#[test]
fn malformed_graph6_is_a_parse_error() {
    let path = temp_path("bad.g6");
    std::fs::write(&path, "zz\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
}

#[test]
fn unknown_family_is_an_input_error() {
    assert_eq!(code(&run(&["analyze", "--gen", "dodecahedron_of_doom"])), 2);
}

#[test]
fn inline_edges() {
    let v = json(&run(&["analyze", "--edges", "0-1,1-2,2-0"]));
    assert_eq!(v["graph"]["m"], 3);
    assert!(close(&v["lambda1"], 2.0));
}

#[test]
fn batch_stdin_reports_per_line() {
    let out = run_stdin(&["oracle", "--param", "zero-forcing"], "Bw\nCx\nzz\n");
    assert_eq!(code(&out), 2);
    let lines: Vec<Value> =
        String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["index"], 0);
    assert_eq!(lines[1]["value"], 2);
    assert_eq!(lines[2]["error"]["kind"], "parse");
}

#[test]
fn gen_round_trip() {
    for (spec, ext) in [("kite:2,4", "g6"), ("double_cover:petersen", "txt"), ("cocktail_party:3", "edges")] {
        let path = temp_path(&format!("rt.{ext}"));
        let out = run(&["gen", spec, "-o", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let from_file = json(&run(&["analyze", path.to_str().unwrap()]));
        let direct = json(&run(&["analyze", "--gen", spec]));
        std::fs::remove_file(&path).ok();
        assert_eq!(from_file, direct, "{spec}");
    }
}

#[test]
fn gen_flags_match_spec_string() {
    let a = run(&["gen", "kite", "--r", "2", "--s", "4"]);
    let b = run(&["gen", "kite:2,4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let edges = run(&["gen", "kite:2,4", "--as", "edges"]);
    let text = String::from_utf8(edges.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 7);
}

#[test]
fn table_output() {
    let out = run(&["--format", "table", "bounds", "--gen", "path:4", "--param", "routing"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("parameter"));
    assert_eq!(text.lines().count(), 4);
}
