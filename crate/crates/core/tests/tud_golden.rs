//! The TOY fixture, parsed by hand: a triangle (label 1) and a path on three
//! vertices (label -1) whose edge list repeats one edge.

use std::fs;
use std::path::{Path, PathBuf};

use homcount::dataset::{find_tud_name, parse_tud, write_tud, Source};
use homcount::embed::{embed_dataset, EmbedConfig};
use homcount::graph::Graph;
use homcount::Error;

fn toy_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/TOY")
}

fn copy_toy(dst: &Path) {
    for entry in fs::read_dir(toy_dir()).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), dst.join(entry.file_name())).unwrap();
    }
}

#[test]
fn toy_fixture_parses_to_known_bundle() {
    assert_eq!(find_tud_name(&toy_dir()).unwrap(), "TOY");
    let b = parse_tud(&toy_dir(), "TOY").unwrap();
    assert_eq!(b.name(), "TOY");
    assert_eq!(b.provenance().source, Source::Tud);
    assert_eq!(b.graphs()[0], Graph::complete(3));
    assert_eq!(b.graphs()[1], Graph::path(3));
    // -1 < 1, so the path is class 0.
    assert_eq!(b.labels(), &[1, 0]);
    assert_eq!(b.num_classes(), 2);
    // One-hot over node labels {0, 2}, then the attribute scaled by 1/6.
    let x = b.features().unwrap();
    let expected = [
        vec![
            vec![1.0, 0.0, 0.5 / 6.0],
            vec![0.0, 1.0, 1.0 / 6.0],
            vec![1.0, 0.0, 0.0],
        ],
        vec![
            vec![0.0, 1.0, 2.0 / 6.0],
            vec![0.0, 1.0, 4.0 / 6.0],
            vec![1.0, 0.0, 1.0],
        ],
    ];
    for (got, want) in x.iter().zip(&expected) {
        for (r, w) in got.iter().zip(want) {
            for (a, b) in r.iter().zip(w) {
                assert!((a - b).abs() < 1e-15, "{a} vs {b}");
            }
        }
    }
}

#[test]
fn write_then_parse_round_trips() {
    let original = parse_tud(&toy_dir(), "TOY").unwrap();
    let dir = tempfile::tempdir().unwrap();
    write_tud(&original, dir.path()).unwrap();
    let name = find_tud_name(dir.path()).unwrap();
    let back = parse_tud(dir.path(), &name).unwrap();
    assert_eq!(back.graphs(), original.graphs());
    assert_eq!(back.labels(), original.labels());
    assert_eq!(back.features(), original.features());
    let cfg = EmbedConfig::default();
    assert_eq!(
        embed_dataset(&back, &cfg).unwrap(),
        embed_dataset(&original, &cfg).unwrap()
    );
}

#[test]
fn malformed_edge_reports_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    copy_toy(dir.path());
    let a = dir.path().join("TOY_A.txt");
    let mut text = fs::read_to_string(&a).unwrap();
    text.push_str("4, x\n");
    fs::write(&a, text).unwrap();
    match parse_tud(dir.path(), "TOY") {
        Err(Error::Format { path, line, .. }) => {
            assert_eq!(path, a);
            assert_eq!(line, 12);
        }
        other => panic!("expected format error, got {other:?}"),
    }
}

#[test]
fn edge_between_graphs_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    copy_toy(dir.path());
    let a = dir.path().join("TOY_A.txt");
    fs::write(&a, "1, 2\n2, 1\n3, 4\n").unwrap();
    let err = parse_tud(dir.path(), "TOY").unwrap_err();
    assert!(matches!(err, Error::Format { line: 3, .. }), "{err}");
    assert!(err.to_string().contains("TOY_A.txt:3"));
}

#[test]
fn short_label_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    copy_toy(dir.path());
    fs::write(dir.path().join("TOY_graph_labels.txt"), "1\n").unwrap();
    let err = parse_tud(dir.path(), "TOY").unwrap_err();
    assert!(err.to_string().contains("TOY_graph_indicator.txt"), "{err}");
}

#[test]
fn missing_required_file_names_it() {
    let dir = tempfile::tempdir().unwrap();
    copy_toy(dir.path());
    fs::remove_file(dir.path().join("TOY_graph_indicator.txt")).unwrap();
    let err = parse_tud(dir.path(), "TOY").unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
    assert!(err.to_string().contains("TOY_graph_indicator.txt"));
}
