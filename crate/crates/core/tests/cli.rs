use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use matroid_liaison::cli::run;

const BIN: &str = env!("CARGO_BIN_EXE_matroid-liaison");

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("matroid-liaison").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn files() -> (TempDir, [String; 6]) {
    let dir = TempDir::new().unwrap();
    let names = [
        write(&dir, "u24.json", r#"{"type": "uniform", "r": 2, "n": 4}"#),
        write(&dir, "bad.json", r#"{"n": 3, "bases": [[1], [2, 3]]}"#),
        write(&dir, "broken.json", "{\"n\": 3, "),
        write(&dir, "triangle.json", r#"{"type": "graphic", "vertices": 3, "edges": [[1, 2], [1, 3], [2, 3]]}"#),
        write(
            &dir,
            "edges.json",
            r#"{"vars": ["a", "b", "c", "d"], "gens": [[1,0,1,0],[1,0,0,1],[0,1,1,0],[0,1,0,1]]}"#,
        ),
        write(&dir, "u22.json", r#"{"type": "uniform", "r": 2, "n": 2}"#),
    ];
    let names = names.map(|p| p.to_str().unwrap().to_string());
    (dir, names)
}

#[test]
fn validate_exit_codes() {
    let (_dir, [u24, bad, broken, ..]) = files();
    let (code, out, _) = call(&["matroid", "validate", &u24]);
    assert_eq!(code, 0);
    assert!(out.contains("rank = 2"));

    let (code, out, _) = call(&["matroid", "validate", &bad, "--json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["valid"], false);
    // F = {2,3}, G = {1}: removing either element of F leaves no basis
    let w = &v["witness"];
    assert_eq!(w["f"], serde_json::json!([2, 3]));
    assert_eq!(w["g"], serde_json::json!([1]));

    let (code, _, err) = call(&["matroid", "validate", &broken]);
    assert_eq!(code, 2);
    assert!(err.contains("malformed JSON"));
    let (code, _, _) = call(&["matroid", "validate", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
}

#[test]
fn ideal_command() {
    let (_dir, [_, _, _, triangle, ..]) = files();
    let (code, out, _) = call(&["ideal", &triangle, "--l", "2", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    // (x1,x2)^2 ∩ (x1,x3)^2 ∩ (x2,x3)^2
    let gens: Vec<Vec<u32>> = serde_json::from_value(v["gens"].clone()).unwrap();
    let mut sorted = gens.clone();
    sorted.sort();
    assert_eq!(sorted, vec![vec![0, 2, 2], vec![1, 1, 1], vec![2, 0, 2], vec![2, 2, 0]]);
    assert_eq!(v["decomposition"]["components"].as_array().unwrap().len(), 3);

    let (_, out, _) = call(&["ideal", &triangle, "--l", "1", "--colon", ""]);
    assert!(out.starts_with("ideal: (x2*x3, x1*x3, x1*x2)\n"));

    let (_, out, _) = call(&["ideal", &triangle, "--l", "2", "--colon", "x3"]);
    assert!(out.starts_with("ideal: (x1*x2, x2^2*x3, x1^2*x3)\n"));

    let (code, _, err) = call(&["ideal", &triangle, "--l", "2", "--colon", "x3^2"]);
    assert_eq!(code, 2);
    assert!(err.contains("squarefree"));
    let (code, _, _) = call(&["ideal", &triangle, "--colon", "x9"]);
    assert_eq!(code, 2);
}

#[test]
fn cm_command() {
    let (dir, [_, _, _, triangle, edges, _]) = files();
    let (code, out, _) = call(&["cm", &triangle, "--l", "2", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cm"], true);

    // two disjoint edges: disconnected, so H̃_0 of the whole complex survives
    let (code, out, _) = call(&["cm", &edges, "--field", "fp:2", "--json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cm"], false);
    assert_eq!(v["field"], "F2");
    assert_eq!(v["witness"]["dim"], 0);

    let simplex = write(&dir, "simplex.json", r#"{"type": "uniform", "r": 3, "n": 3}"#);
    let (code, _, err) = call(&["cm", simplex.to_str().unwrap(), "--side", "sr"]);
    assert_eq!(code, 2);
    assert!(err.contains("zero ideal"));

    let (code, _, _) = call(&["cm", &triangle, "--field", "fp:4"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["cm", &triangle, "--jobs", "2", "--l", "3"]);
    assert_eq!(code, 0);
}

#[test]
fn glicci_command() {
    let (_dir, [_, _, _, triangle, _, u22]) = files();
    let (code, out, _) = call(&["glicci", &triangle, "--l", "2", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "verified-shallow");
    assert!(v["steps"].as_array().unwrap().len() <= 5);
    assert_eq!(v["terminal"]["kind"], "complete-intersection");

    let (code, out, _) = call(&["glicci", &u22, "--l", "1", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 0);
    assert_eq!(v["terminal"]["gens"], serde_json::json!(["x2", "x1"]));

    let (code, out, _) = call(&["glicci", &triangle, "--l", "2", "--deep", "--budget-pairs", "1"]);
    assert_eq!(code, 3);
    assert!(out.trim_end().ends_with("status: incomplete(budget)"));
    let (code, _, _) = call(&["glicci", &triangle, "--budget-pairs", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn deep_glicci_is_deterministic() {
    let (_dir, [_, _, _, triangle, ..]) = files();
    let args = ["glicci", triangle.as_str(), "--l", "2", "--deep", "--json"];
    let (code, first, _) = call(&args);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["status"], "verified");
    assert!(!first.contains("elapsed_ms"));
    let (_, second, _) = call(&args);
    assert_eq!(first, second);

    let (_, timed, _) = call(&["glicci", triangle.as_str(), "--l", "2", "--deep", "--json", "--timings"]);
    assert!(timed.contains("elapsed_ms"));
}

#[test]
fn binary_exit_codes_and_budget_env() {
    let (_dir, [u24, bad, broken, triangle, ..]) = files();
    let status = |cmd: &mut Command| cmd.output().unwrap().status.code().unwrap();
    assert_eq!(status(Command::new(BIN).args(["matroid", "validate", &u24])), 0);
    assert_eq!(status(Command::new(BIN).args(["matroid", "validate", &bad])), 1);
    assert_eq!(status(Command::new(BIN).args(["matroid", "validate", &broken])), 2);
    assert_eq!(status(Command::new(BIN).args(["no-such-command"])), 2);

    let deep = ["glicci", triangle.as_str(), "--l", "2", "--deep"];
    assert_eq!(status(Command::new(BIN).args(deep).env("MATROID_LIAISON_BUDGET", "1")), 3);
    assert_eq!(status(Command::new(BIN).args(deep).env("MATROID_LIAISON_BUDGET", "lots")), 2);
    // the flag wins over the environment
    let mut flagged = Command::new(BIN);
    flagged.args(deep).args(["--budget-pairs", "20000"]).env("MATROID_LIAISON_BUDGET", "1");
    assert_eq!(status(&mut flagged), 0);
}
