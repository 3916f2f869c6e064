//! End-to-end runs of the `homcount` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn homcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_k3(dir: &Path) -> String {
    let path = dir.join("k3.txt");
    fs::write(&path, "3\n0 1\n1 2\n0 2\n").unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn patterns_lists_thirteen_trees() {
    let v = json(&homcount(&["patterns", "--family", "trees", "--max-size", "6"]));
    assert_eq!(v["count"], 13);
    assert_eq!(v["patterns"].as_array().unwrap().len(), 13);
    assert_eq!(v["config"]["max_size"], 6);
    let v = json(&homcount(&["patterns", "--family", "cycles", "--max-size", "8"]));
    assert_eq!(v["count"], 7);
}

#[test]
fn hom_counts_edge_into_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_k3(dir.path());
    let out = homcount(&["hom", "--pattern", "edge", "--graph", &g]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "6");
    let out = homcount(&["hom", "--pattern", "triangle", "--graph", &g, "--density"]);
    let d: f64 = String::from_utf8_lossy(&out.stdout).trim().parse().unwrap();
    assert!((d - 6.0 / 27.0).abs() < 1e-15);

    let report = dir.path().join("hom.json");
    let out = homcount(&[
        "hom",
        "--pattern",
        "cycle:4",
        "--graph",
        &g,
        "--out",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["value"], "18");
    assert_eq!(v["config"]["pattern"], "cycle:4");
}

#[test]
fn weighted_hom_reads_weight_file() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_k3(dir.path());
    let w = dir.path().join("w.txt");
    fs::write(&w, "1\n2\n0.5\n").unwrap();
    let out = homcount(&[
        "hom",
        "--pattern",
        "edge",
        "--graph",
        &g,
        "--weights",
        w.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // 2·(1·2 + 2·0.5 + 1·0.5)
    let v: f64 = String::from_utf8_lossy(&out.stdout).trim().parse().unwrap();
    assert!((v - 7.0).abs() < 1e-12);
}

#[test]
fn exit_codes_separate_usage_from_data_errors() {
    // Unknown flag.
    assert_eq!(homcount(&["patterns", "--bogus"]).status.code(), Some(1));
    // Bad parameter value.
    assert_eq!(homcount(&["patterns", "--max-size", "0"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let g = write_k3(dir.path());
    assert_eq!(
        homcount(&["hom", "--pattern", "blob", "--graph", &g]).status.code(),
        Some(1)
    );
    // Missing and malformed data.
    let missing = dir.path().join("nope.txt");
    let out = homcount(&["hom", "--pattern", "edge", "--graph", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope.txt"));
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3\n0 1\n1 x\n").unwrap();
    let out = homcount(&["hom", "--pattern", "edge", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.txt:3"));
}

#[test]
fn gen_embed_eval_matches_direct_eval() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("csl");
    let data_s = data.to_str().unwrap();
    let common = ["--seed", "7", "--copies", "3"];
    let out = homcount(&[&["gen", "csl", "--out", data_s][..], &common].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let record: Value = serde_json::from_str(&fs::read_to_string(data.join("generator.json")).unwrap()).unwrap();
    assert_eq!(record["seed"], 7);
    assert_eq!(record["params"]["copies_per_class"], 3);

    let csv = dir.path().join("emb.csv");
    let csv_s = csv.to_str().unwrap();
    let out = homcount(&[
        "embed",
        "--dataset",
        data_s,
        "--family",
        "cycle:8",
        "--out",
        csv_s,
        "--seed",
        "7",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let header = fs::read_to_string(&csv).unwrap();
    assert!(header.starts_with("graph_id,label,"));
    let sidecar: Value = serde_json::from_str(&fs::read_to_string(csv.with_extension("json")).unwrap()).unwrap();
    assert_eq!(sidecar["config"]["embed"]["family"]["max_size"], 8);

    let cv = ["--folds", "3", "--repeats", "2", "--epochs", "50", "--seed", "7"];
    let via_file = json(&homcount(&[&["eval", "--embedding", csv_s][..], &cv].concat()));
    let direct = json(&homcount(
        &[
            &["eval", "--generate", "csl", "--copies", "3", "--family", "cycle:8"][..],
            &cv,
        ]
        .concat(),
    ));
    assert_eq!(via_file["fold_accuracies"].as_array().unwrap().len(), 6);
    assert_eq!(via_file["fold_accuracies"], direct["fold_accuracies"]);
    assert_eq!(direct["seed"], 7);
    assert_eq!(direct["config"]["source"]["generated"]["params"]["copies_per_class"], 3);
}

#[test]
fn bench_reports_timings() {
    let v = json(&homcount(&[
        "bench",
        "--generate",
        "csl",
        "--copies",
        "2",
        "--folds",
        "2",
        "--repeats",
        "1",
        "--epochs",
        "5",
    ]));
    assert!(v["embed_seconds"].as_f64().unwrap() >= 0.0);
    let v = json(&homcount(&[
        "bench",
        "--scaling",
        "--base-vertices",
        "200",
        "--doublings",
        "1",
        "--trials",
        "1",
        "--family",
        "tree:4",
    ]));
    assert_eq!(v["scaling"]["points"].as_array().unwrap().len(), 2);
}
