//! TU benchmark format: `<name>_A.txt`, `<name>_graph_indicator.txt`,
//! `<name>_graph_labels.txt` and optional `<name>_node_labels.txt` /
//! `<name>_node_attributes.txt`, all 1-based and comma separated.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use super::{DatasetBundle, Provenance, Source};
use crate::error::{Error, Result};
use crate::graph::Graph;

struct Lines {
    path: PathBuf,
    rows: Vec<(usize, String)>,
}

fn read_lines(path: &Path) -> Result<Lines> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    Ok(Lines {
        path: path.to_path_buf(),
        rows,
    })
}

fn read_optional(path: &Path) -> Result<Option<Lines>> {
    if path.exists() {
        read_lines(path).map(Some)
    } else {
        Ok(None)
    }
}

fn parse_field<T: std::str::FromStr>(lines: &Lines, line: usize, field: &str) -> Result<T> {
    field
        .trim()
        .parse()
        .map_err(|_| Error::format(&lines.path, line, format!("cannot parse {:?}", field.trim())))
}

/// Finds the dataset name from the `*_A.txt` file inside `dir`.
pub fn find_tud_name(dir: &Path) -> Result<String> {
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut names: Vec<String> = entries
        .filter_map(|e| e.ok())
        .filter_map(|e| {
            e.file_name()
                .to_str()
                .and_then(|f| f.strip_suffix("_A.txt"))
                .map(str::to_string)
        })
        .collect();
    names.sort();
    match names.len() {
        1 => Ok(names.pop().unwrap()),
        0 => Err(Error::Validation(format!("no *_A.txt file in {}", dir.display()))),
        _ => Err(Error::Validation(format!(
            "several datasets in {}: {}",
            dir.display(),
            names.join(", ")
        ))),
    }
}

/// Reads a TU dataset. Edges are symmetrised and deduplicated, self-loops are
/// dropped, graph labels are remapped to `0..c` in ascending order. Discrete
/// node labels become one-hot features; real attributes are appended, with
/// any column that leaves `[0, 1]` min-max scaled over the whole dataset.
pub fn parse_tud(dir: &Path, name: &str) -> Result<DatasetBundle> {
    let file = |suffix: &str| dir.join(format!("{name}_{suffix}.txt"));
    let indicator = read_lines(&file("graph_indicator"))?;
    let graph_labels = read_lines(&file("graph_labels"))?;
    let edges = read_lines(&file("A"))?;
    let node_labels = read_optional(&file("node_labels"))?;
    let attributes = read_optional(&file("node_attributes"))?;

    // Node i (0-based) belongs to graph owner[i] at local index local[i].
    let mut owner = Vec::with_capacity(indicator.rows.len());
    for (line, text) in &indicator.rows {
        let id: usize = parse_field(&indicator, *line, text)?;
        if id == 0 {
            return Err(Error::format(&indicator.path, *line, "graph ids are 1-based"));
        }
        owner.push(id - 1);
    }
    let num_graphs = graph_labels.rows.len();
    if let Some(pos) = owner.iter().position(|&g| g >= num_graphs) {
        return Err(Error::format(
            &indicator.path,
            indicator.rows[pos].0,
            format!("graph id {} but only {num_graphs} graph labels", owner[pos] + 1),
        ));
    }
    let mut sizes = vec![0usize; num_graphs];
    let local: Vec<usize> = owner
        .iter()
        .map(|&g| {
            sizes[g] += 1;
            sizes[g] - 1
        })
        .collect();

    let mut edge_lists: Vec<Vec<(usize, usize)>> = vec![Vec::new(); num_graphs];
    for (line, text) in &edges.rows {
        let mut parts = text.split(',');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::format(
                &edges.path,
                *line,
                "expected two comma-separated node ids",
            ));
        };
        let a: usize = parse_field(&edges, *line, a)?;
        let b: usize = parse_field(&edges, *line, b)?;
        for id in [a, b] {
            if id == 0 || id > owner.len() {
                return Err(Error::format(
                    &edges.path,
                    *line,
                    format!("node id {id} outside 1..={}", owner.len()),
                ));
            }
        }
        let (a, b) = (a - 1, b - 1);
        if owner[a] != owner[b] {
            return Err(Error::format(
                &edges.path,
                *line,
                format!("edge joins graph {} and graph {}", owner[a] + 1, owner[b] + 1),
            ));
        }
        if a != b {
            edge_lists[owner[a]].push((local[a], local[b]));
        }
    }
    let graphs: Vec<Graph> = sizes
        .iter()
        .zip(&edge_lists)
        .map(|(&n, list)| Graph::new(n, list))
        .collect::<Result<_>>()?;

    let mut raw_labels = Vec::with_capacity(num_graphs);
    for (line, text) in &graph_labels.rows {
        raw_labels.push(parse_field::<i64>(&graph_labels, *line, text)?);
    }
    let classes: BTreeMap<i64, usize> = {
        let mut distinct: Vec<i64> = raw_labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.into_iter().enumerate().map(|(i, l)| (l, i)).collect()
    };
    let labels: Vec<usize> = raw_labels.iter().map(|l| classes[l]).collect();

    let mut columns: Vec<Vec<f64>> = Vec::new();
    if let Some(nl) = &node_labels {
        expect_rows(nl, owner.len())?;
        let mut values = Vec::with_capacity(owner.len());
        for (line, text) in &nl.rows {
            let first = text.split(',').next().unwrap_or("");
            values.push(parse_field::<i64>(nl, *line, first)?);
        }
        let mut distinct = values.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for d in &distinct {
            columns.push(values.iter().map(|v| f64::from(u8::from(v == d))).collect());
        }
    }
    if let Some(at) = &attributes {
        expect_rows(at, owner.len())?;
        let mut width = None;
        let mut attr_cols: Vec<Vec<f64>> = Vec::new();
        for (line, text) in &at.rows {
            let row: Vec<f64> = text
                .split(',')
                .map(|f| parse_field(at, *line, f))
                .collect::<Result<_>>()?;
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::format(&at.path, *line, "non-finite attribute"));
            }
            match width {
                None => {
                    width = Some(row.len());
                    attr_cols = vec![Vec::with_capacity(owner.len()); row.len()];
                }
                Some(w) if w != row.len() => {
                    return Err(Error::format(
                        &at.path,
                        *line,
                        format!("{} attributes, earlier rows have {w}", row.len()),
                    ));
                }
                Some(_) => {}
            }
            for (col, v) in attr_cols.iter_mut().zip(row) {
                col.push(v);
            }
        }
        for mut col in attr_cols {
            min_max_if_needed(&mut col);
            columns.push(col);
        }
    }

    let features = if columns.is_empty() {
        None
    } else {
        let mut per_graph: Vec<Vec<Vec<f64>>> = sizes.iter().map(|&n| Vec::with_capacity(n)).collect();
        for (i, &g) in owner.iter().enumerate() {
            per_graph[g].push(columns.iter().map(|c| c[i]).collect());
        }
        Some(per_graph)
    };

    DatasetBundle::new(
        name,
        graphs,
        features,
        labels,
        Provenance {
            source: Source::Tud,
            seed: None,
        },
    )
}

fn expect_rows(lines: &Lines, expected: usize) -> Result<()> {
    if lines.rows.len() != expected {
        let line = lines.rows.last().map_or(1, |r| r.0);
        return Err(Error::format(
            &lines.path,
            line,
            format!(
                "{} rows but the graph indicator lists {expected} nodes",
                lines.rows.len()
            ),
        ));
    }
    Ok(())
}

fn min_max_if_needed(col: &mut [f64]) {
    if col.iter().all(|v| (0.0..=1.0).contains(v)) {
        return;
    }
    let lo = col.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = hi - lo;
    for v in col.iter_mut() {
        *v = if span > 0.0 { (*v - lo) / span } else { 0.0 };
    }
}

/// Writes `bundle` in TU format under `dir` (created if missing). Every edge
/// is written in both directions; labels are the contiguous class indices
/// and features, if any, go to `node_attributes` at full precision.
pub fn write_tud(bundle: &DatasetBundle, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let name = bundle.name();
    let mut a = String::new();
    let mut indicator = String::new();
    let mut offset = 0usize;
    for (gi, g) in bundle.graphs().iter().enumerate() {
        for u in 0..g.num_vertices() {
            indicator.push_str(&format!("{}\n", gi + 1));
            for &v in g.neighbors(u) {
                a.push_str(&format!("{}, {}\n", offset + u + 1, offset + v + 1));
            }
        }
        offset += g.num_vertices();
    }
    let labels: String = bundle.labels().iter().map(|l| format!("{l}\n")).collect();
    let write = |suffix: &str, body: &str| -> Result<()> {
        let path = dir.join(format!("{name}_{suffix}.txt"));
        fs::write(&path, body).map_err(|e| Error::io(&path, e))
    };
    write("A", &a)?;
    write("graph_indicator", &indicator)?;
    write("graph_labels", &labels)?;
    if let Some(features) = bundle.features() {
        let body: String = features
            .iter()
            .flatten()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
                cells.join(", ") + "\n"
            })
            .collect();
        write("node_attributes", &body)?;
    }
    Ok(())
}
