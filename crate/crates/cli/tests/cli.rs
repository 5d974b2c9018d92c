use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use barbell_core::barbell::brute_force_barbell;
use barbell_core::catalog::all_graphs;
use barbell_core::graph::named;
use barbell_core::ops::cartesian;
use barbell_core::{encode_graph6, parse_graph6};
use serde_json::Value;

fn bpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bpart")).args(args).output().expect("run bpart")
}

fn bpart_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bpart"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn bpart");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn barbell_check_exit_codes() {
    assert_eq!(code(&bpart(&["barbell", "check", "IheA@GUAo"])), 1);
    let out = bpart_stdin(&["barbell", "check", "-", "--json"], "4\n1 2\n3 4\n");
    assert_eq!(code(&out), 0);
    let cert = json(&out);
    assert_eq!(cert["schema"], "barbell-certificate/1");
    assert_eq!(cert["R"], serde_json::json!([]));
    assert_eq!(cert["verdict"], "admits");
    let malformed = bpart(&["barbell", "check", "C~~~"]);
    assert_eq!(code(&malformed), 64);
    assert!(!malformed.stderr.is_empty());
}

#[test]
fn edge_list_errors_carry_line_numbers() {
    let out = bpart_stdin(&["barbell", "check", "-"], "1 2\n2 x\n");
    assert_eq!(code(&out), 64);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&bpart(&["barbell"])), 64);
    assert_eq!(code(&bpart(&["frobnicate"])), 64);
    assert_eq!(code(&bpart(&["ops", "build", "prism", "4"])), 64);
    assert_eq!(code(&bpart(&["--help"])), 0);
}

#[test]
fn brute_cap_comes_from_the_environment() {
    let bad = Command::new(env!("CARGO_BIN_EXE_bpart"))
        .args(["barbell", "check", "C~"])
        .env("BARBELL_BRUTE_CAP", "banana")
        .output()
        .unwrap();
    assert_eq!(code(&bad), 64);
    // a one-node budget forces the fallback, which the cap then forbids
    let capped = Command::new(env!("CARGO_BIN_EXE_bpart"))
        .args(["barbell", "check", "IheA@GUAo", "--budget", "1", "--json"])
        .env("BARBELL_BRUTE_CAP", "0")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 1, "Petersen is refuted by the structural screen before any search");
    // the cube: 2-connected with diameter 3, so the screen does not decide it
    let cube = encode_graph6(&cartesian(&named::cycle(4), &named::complete(2)).0);
    let cube_like = cube.as_str();
    let budget = Command::new(env!("CARGO_BIN_EXE_bpart"))
        .args(["barbell", "check", cube_like, "--budget", "1"])
        .env("BARBELL_BRUTE_CAP", "0")
        .output()
        .unwrap();
    let fallback = Command::new(env!("CARGO_BIN_EXE_bpart"))
        .args(["barbell", "check", cube_like, "--budget", "1", "--json"])
        .env("BARBELL_BRUTE_CAP", "15")
        .output()
        .unwrap();
    assert_eq!(code(&budget), 2, "{}", String::from_utf8_lossy(&budget.stdout));
    assert_eq!(json(&fallback)["method"], "brute_force");
}

#[test]
fn ops_build_prism_and_tensor_complete() {
    let out = bpart(&["ops", "build", "prism", "4", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema"], "ops-build/1");
    assert_eq!(v["n"], 32);
    assert!(v["partition"]["W1"].as_array().is_some_and(|w| !w.is_empty()));

    let out = bpart(&["ops", "build", "tensor-complete", "3", "3"]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert!(v["hypothesis_error"].as_str().unwrap().contains("m >= 6"));
    assert_eq!(v["search"]["verdict"], "does_not_admit");
    assert!(v["notes"].to_string().contains("no barbell partition exists"));
}

#[test]
fn ops_build_jdup_of_a_path_pendant() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p5.txt");
    fs::write(&path, "1 2\n2 3\n3 4\n4 5\n").unwrap();
    let out = bpart(&["ops", "build", "jdup", path.to_str().unwrap(), "1"]);
    let v = json(&out);
    assert_eq!(v["n"], 6);
    assert!(v["notes"].to_string().contains("q(H) = |H| - 1"));
}

#[test]
fn ops_build_transfers_a_given_partition() {
    let dir = tempfile::tempdir().unwrap();
    let part = dir.path().join("p.json");
    // 2K_2 on vertices 1..4
    fs::write(&part, r#"{"R":[],"W1":[1,2],"W2":[3,4]}"#).unwrap();
    let two_k2 = encode_graph6(&named::disjoint_union(&named::complete(2), &named::complete(2)));
    let out = bpart(&["ops", "build", "cartesian", "A_", &two_k2, "--transfer-partition", part.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["partition"]["W1"], serde_json::json!([1, 2, 5, 6]));

    fs::write(&part, r#"{"R":[],"W1":[1,3],"W2":[2,4]}"#).unwrap();
    let bad = bpart(&["ops", "build", "cartesian", "A_", &two_k2, "--transfer-partition", part.to_str().unwrap()]);
    assert_eq!(code(&bad), 64);
}

#[test]
fn ssp_check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cycle = dir.path().join("c6.txt");
    fs::write(
        &cycle,
        "6\n2 -3 0 0 0 -3\n-3 2 -3 0 0 0\n0 -3 2 -3 0 0\n0 0 -3 -2 -3 0\n0 0 0 -3 -2 -3\n-3 0 0 0 -3 -2\n",
    )
    .unwrap();
    let out = bpart(&["ssp", "check", cycle.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["schema"], "property-report/1");

    let out = bpart_stdin(&["ssp", "check", "-"], "2\n1 0\n0 1\n");
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["witness"], serde_json::json!([[["0", "1"], ["1", "0"]]]));

    let out = bpart_stdin(&["ssp", "check", "-", "--float"], "3\n0 0 0\n0 1 0\n0 0 1.000000001\n");
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["indeterminate"], true);

    assert_eq!(code(&bpart_stdin(&["ssp", "check", "-"], "2\n1 2\n3 4\n")), 64);
}

#[test]
fn census_records_and_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.g6");
    fs::write(&empty, "").unwrap();
    let out = bpart(&["census", empty.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());

    let catalog: String = all_graphs(4).iter().map(|g| encode_graph6(g) + "\n").collect();
    let file = dir.path().join("four.g6");
    fs::write(&file, &catalog).unwrap();
    let out_path = dir.path().join("out.jsonl");
    let out = bpart(&["census", file.to_str().unwrap(), "--jobs", "3", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&out_path).unwrap();
    let records: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 11);
    let mut admits = 0;
    for (line, (r, g6)) in records.iter().zip(catalog.lines()).enumerate() {
        assert_eq!(r["schema"], "census-record/1");
        assert_eq!(r["line"], line + 1);
        assert_eq!(r["graph6"], g6);
        assert!(r.get("wall_time_ms").is_none());
        let truth = brute_force_barbell(&parse_graph6(g6).unwrap()).unwrap().is_some();
        assert_eq!(r["barbell"]["verdict"] == "admits", truth, "{g6}");
        admits += usize::from(truth);
    }
    assert!(admits > 0 && admits < 11);

    let timed = bpart(&["census", file.to_str().unwrap(), "--timing", "--ssp-trials", "3", "--seed", "9"]);
    let first: Value = serde_json::from_slice(timed.stdout.split(|&b| b == b'\n').next().unwrap()).unwrap();
    assert!(first["wall_time_ms"].is_u64());
    assert_eq!(first["ssp_evidence"]["seed"], 9);

    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "C~\n!!\nA_\n").unwrap();
    let out = bpart(&["census", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn theorems_filter() {
    let out = bpart(&["theorems", "--filter", "prism"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("PASS prism"), "{text}");
    assert_eq!(code(&bpart(&["theorems", "--filter", "no-such-suite"])), 64);
}
