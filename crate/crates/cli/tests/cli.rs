use std::process::{Command, Output};

use serde_json::Value;

fn cyclosure(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclosure")).args(args).env_remove("CYCLOSURE_THREADS").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn gen_emits_graph6_and_dot() {
    let out = cyclosure(&["gen", "--family", "cycle:5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "Dhc");

    let out = cyclosure(&["gen", "--family", "hypercube:3", "--dot"]);
    let text = stdout(&out);
    assert!(text.contains("graph") && text.contains("\"000\""), "{text}");
}

#[test]
fn check_and_classify() {
    let out = cyclosure(&["check", "--g6", "Dhc", "--path", "0,1,2"]);
    assert_eq!(json_lines(&out)[0]["closes"], true);

    let out = cyclosure(&["classify", "--g6", "Dhc"]);
    let c = &json_lines(&out)[0];
    assert_eq!(c["vertex_transitive"], true);
    assert_eq!(c["edge_transitive"], true);
    assert_eq!(c["kappa"], 2);
    assert_eq!(c["group_order"], "10");
}

#[test]
fn witness_certifies() {
    let out = cyclosure(&["witness", "--family", "circulant:14:1,2", "--len", "5", "--certify"]);
    let w = &json_lines(&out)[0];
    assert_eq!(w["path"], serde_json::json!([0, 12, 13, 1, 2, 3]));
    assert_eq!(w["certified"]["blocking_certificate"], true);
    assert_eq!(w["certified"]["closes_to_cycle"], false);
}

#[test]
fn verify_exit_codes() {
    let out = cyclosure(&["verify", "--claim", "CW_STARS"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["verdict"], "pass");

    // VT paths of length 5 need not close; the counterexample must replay
    let out = cyclosure(&["verify", "--claim", "VT_PTOC", "--len-range", "0..5"]);
    assert_eq!(out.status.code(), Some(1));
    let report = &json_lines(&out)[0];
    assert_eq!(report["verdict"], "fail");
    let cx = &report["counterexample"];
    let path: Vec<String> = cx["path"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
    let replay = cyclosure(&["check", "--g6", cx["graph6"].as_str().unwrap(), "--path", &path.join(",")]);
    assert_eq!(json_lines(&replay)[0]["closes"], false);

    let out = cyclosure(&["verify", "--claim", "NOPE"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn search_small_and_thirteen() {
    let out = cyclosure(&["search", "--n", "5", "--template", "circulant", "--len", "4", "--induced"]);
    assert!(out.status.success());
    assert!(stdout(&out).trim().is_empty());

    let out = cyclosure(&["search", "--n", "13", "--template", "circulant", "--len", "4", "--induced"]);
    let hits = json_lines(&out);
    assert!(!hits.is_empty());
    assert!(hits.iter().all(|h| h["certified"] == true));

    let out = cyclosure(&["search", "--n", "5", "--template", "ingest", "--len", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thread_variable_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclosure"))
        .args(["verify", "--claim", "CW_STARS"])
        .env("CYCLOSURE_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(env!("CARGO_BIN_EXE_cyclosure"))
        .args(["gen", "--family", "cycle:5"])
        .env("CYCLOSURE_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flags_override_config() {
    let dir = std::env::temp_dir().join(format!("cyclosure-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("config.json");
    std::fs::write(&config, r#"{"threads": 1, "max_n": 5}"#).unwrap();
    let config = config.to_str().unwrap();

    let from_config = cyclosure(&["--config", config, "verify", "--claim", "WATKINS_EQ"]);
    assert_eq!(json_lines(&from_config)[0]["params"]["census"], "builtin connected, n <= 5");
    let from_flag = cyclosure(&["--config", config, "verify", "--claim", "WATKINS_EQ", "--max-n", "6"]);
    assert_eq!(json_lines(&from_flag)[0]["params"]["census"], "builtin connected, n <= 6");

    std::fs::write(dir.join("bad.json"), r#"{"thread": 1}"#).unwrap();
    let bad = cyclosure(&["--config", dir.join("bad.json").to_str().unwrap(), "gen", "--family", "cycle:5"]);
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
