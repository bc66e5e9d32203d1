//! End-to-end runs of the `geomforge` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use geomforge::graph6::from_graph6;
use serde_json::Value;

fn geomforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geomforge"))
        .args(args)
        .env_remove("GEOMFORGE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("geomforge-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_exit_codes() {
    let ok = geomforge(&["verify", "GRAPH6_ROUNDTRIP", "SIGMA1_PARAMS"]);
    assert_eq!(ok.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(report["schema"], "geomforge-report/1");
    assert_eq!(report["claims"].as_array().unwrap().len(), 2);
    assert!(report["claims"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));

    assert_eq!(geomforge(&["verify", "NO_SUCH_CLAIM"]).status.code(), Some(1));
    let capped = geomforge(&["--node-cap", "10", "verify", "W3_CENSUS"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("SKIP W3_CENSUS"));
}

#[test]
fn census_cap_and_unknown_kind() {
    assert_eq!(geomforge(&["--node-cap", "1000", "census", "h5_4"]).status.code(), Some(2));
    assert_eq!(geomforge(&["census", "nonsense"]).status.code(), Some(1));
    assert_eq!(geomforge(&["build", "nonsense"]).status.code(), Some(1));
}

#[test]
fn emit_all_lists_every_hyperoval() {
    let out = geomforge(&["census", "w3", "--emit-all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1737);
    assert!(text.lines().all(|l| l.split(' ').all(|x| x.parse::<usize>().unwrap() < 40)));
}

#[test]
fn census_does_not_depend_on_workers() {
    let run = |w: &str| geomforge(&["--workers", w, "census", "q4_3"]).stdout;
    let one = run("1");
    assert!(!one.is_empty());
    assert_eq!(one, run("3"));
}

#[test]
fn build_writes_graph6_dot_and_cache() {
    let dir = scratch_dir("build");
    let g6 = dir.join("g.g6");
    let dot = dir.join("g.dot");
    let cache = dir.join("cache");
    let out = Command::new(env!("CARGO_BIN_EXE_geomforge"))
        .args(["build", "gf3", "--n", "5", "--eps", "-1", "--graph6"])
        .arg(&g6)
        .arg("--dot")
        .arg(&dot)
        .env("GEOMFORGE_CACHE_DIR", &cache)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let g = from_graph6(std::fs::read_to_string(&g6).unwrap().trim()).unwrap();
    let p = g.srg_params().unwrap();
    let record: Value =
        serde_json::from_str(&std::fs::read_to_string(cache.join("gf3_n5_eps-1.json")).unwrap()).unwrap();
    assert_eq!(record["schema"], "geomforge-build/1");
    assert_eq!(record["srg"], serde_json::json!([p.v, p.k, p.lambda, p.mu]));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph"));

    // a second run is served from the cache and prints the same record
    let again = Command::new(env!("CARGO_BIN_EXE_geomforge"))
        .args(["build", "gf3", "--n", "5", "--eps", "-1"])
        .env("GEOMFORGE_CACHE_DIR", &cache)
        .output()
        .unwrap();
    let printed: Value = serde_json::from_slice(&again.stdout).unwrap();
    assert_eq!(printed, record);
    let _ = std::fs::remove_dir_all(&dir);
}
