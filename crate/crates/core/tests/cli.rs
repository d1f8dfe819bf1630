use std::process::{Command, Output};

use serde_json::Value;

fn drgkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drgkit")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_exit_codes() {
    let ok = drgkit(&["analyze", "10,8;1,5"]);
    assert_eq!(ok.status.code(), Some(0));
    let r = json(&ok);
    assert_eq!(r["spectral"]["eigenvalues"], serde_json::json!(["10", "1", "-5"]));
    assert_eq!(r["spectral"]["multiplicities"], serde_json::json!(["1", "20", "6"]));
    let bad = drgkit(&["analyze", "10,8;1,6"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("k_2 not integral"));
    assert_eq!(drgkit(&["analyze", "10,8;2,5"]).status.code(), Some(2));
    assert_eq!(drgkit(&["analyze", "not an array"]).status.code(), Some(2));
    let quiet = drgkit(&["--quiet", "analyze", "10,8;1,6"]);
    assert!(quiet.stderr.is_empty());
}

#[test]
fn analyze_flags() {
    let r = json(&drgkit(&["analyze", "42,40,32;1,5,21", "--assume-2-bounded"]));
    assert_eq!(r["classification"]["hermitian"]["verdict"]["kind"], "IsHermitianDualPolar");
    assert_eq!(r["classification"]["hermitian"]["verdict"]["r"], 2);
    let cube = json(&drgkit(&["analyze", "3,2,1;1,2,3"]));
    assert_eq!(cube["array"]["bipartite"], true);
    let scan = cube["krein"]["light_tail_scan"].as_array().unwrap();
    assert_eq!(scan[3]["is_light_tail"], false);
    let tail = json(&drgkit(&["analyze", "10,8;1,5"]));
    let full = json(&drgkit(&["analyze", "10,8;1,5", "--krein-full"]));
    assert!(full["krein"]["entries"].as_array().unwrap().len() > tail["krein"]["entries"].as_array().unwrap().len());
}

#[test]
fn table_output() {
    let out = drgkit(&["--format", "table", "analyze", "3,2,2,1;1,1,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("root of"));
    assert!(s.contains("≈ 0.414214"));
}

#[test]
fn search_streams_sorted_reports() {
    let out = drgkit(&["--jobs", "2", "search", "--max-k", "11", "--max-D", "2", "--hypotheses", "lt"]);
    assert_eq!(out.status.code(), Some(0));
    let texts: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["array"]["text"].as_str().unwrap().to_string())
        .collect();
    assert!(texts.contains(&"10,8;1,5".to_string()));
    let mut sorted = texts.clone();
    sorted.sort();
    assert_eq!(texts, sorted);
    assert_eq!(drgkit(&["search", "--max-k", "201", "--max-D", "2"]).status.code(), Some(2));
    assert_eq!(drgkit(&["search", "--max-k", "20", "--max-D", "7"]).status.code(), Some(2));
}

#[test]
fn construct_export_and_round_trip() {
    let dir = std::env::temp_dir().join(format!("drgkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gq.txt");
    let out = drgkit(&["construct", "hermitian", "2", "2", "--verify", "full", "--export", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let c = json(&out);
    assert_eq!(c["graph"]["n"], 27);
    assert_eq!(c["graph"]["all_checks_pass"], true);
    let edges = std::fs::read_to_string(&path).unwrap();
    assert_eq!(edges.lines().count(), 135);
    assert!(edges.lines().all(|l| l.split(' ').count() == 2));
    let a = json(&drgkit(&["analyze", c["graph"]["measured"]["intersection_array"]["text"].as_str().unwrap()]));
    for section in ["spectral", "classification"] {
        assert_eq!(serde_json::to_string(&a[section]).unwrap(), serde_json::to_string(&c[section]).unwrap());
    }
    let jpath = dir.join("h.json");
    let out = drgkit(&["construct", "hamming", "2", "3", "--export", jpath.to_str().unwrap(), "--export-format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let bundle: Value = serde_json::from_str(&std::fs::read_to_string(&jpath).unwrap()).unwrap();
    assert_eq!(bundle["n"], 9);
    assert_eq!(bundle["labels"][4], "11");
    assert_eq!(drgkit(&["construct", "hermitian", "3", "3"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn classify_runs_bounded_pipeline() {
    let r = json(&drgkit(&["classify", "42,40,32;1,5,21", "--m-bounded", "2"]));
    assert_eq!(r["classification"]["bounded"]["verdict"]["kind"], "IsHermitianDualPolar");
    let r = json(&drgkit(&["classify", "3,2,1;1,2,3"]));
    assert_eq!(r["classification"]["hermitian"]["verdict"]["kind"], "HypothesisFails");
}
