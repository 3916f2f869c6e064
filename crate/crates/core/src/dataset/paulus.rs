//! Strongly regular graphs with parameters (25, 12, 5, 6): one class per
//! isomorphism type, each repeated under random relabelling.

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{DatasetBundle, Provenance, Source};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPermutation};

/// Adjacency matrices shipped with the crate: 25 rows of `0`/`1` per graph,
/// graphs separated by blank lines.
pub const PAULUS_FIXTURE: &str = include_str!("../../data/paulus25.txt");

const ORDER: usize = 25;
const DEGREE: usize = 12;
const LAMBDA: usize = 5;
const MU: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaulusConfig {
    pub copies_per_class: usize,
}

impl Default for PaulusConfig {
    fn default() -> Self {
        PaulusConfig { copies_per_class: 15 }
    }
}

pub fn load_paulus(path: &Path, config: &PaulusConfig, seed: u64) -> Result<DatasetBundle> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    paulus_from_str(&text, path, config, seed)
}

/// Parses the matrix blocks in `text`, checks every block is a
/// (25, 12, 5, 6) strongly regular graph and that no two blocks are equal,
/// then emits `copies_per_class` relabelled copies per block.
pub fn paulus_from_str(text: &str, source: &Path, config: &PaulusConfig, seed: u64) -> Result<DatasetBundle> {
    if config.copies_per_class == 0 {
        return Err(Error::Parameter("copies_per_class must be positive".into()));
    }
    let templates = parse_blocks(text, source)?;
    if templates.len() < 2 {
        return Err(Error::Validation(format!(
            "{}: need at least two graphs, found {}",
            source.display(),
            templates.len()
        )));
    }
    for i in 0..templates.len() {
        for j in 0..i {
            if templates[i] == templates[j] {
                return Err(Error::Validation(format!(
                    "{}: graphs {} and {} are identical",
                    source.display(),
                    j + 1,
                    i + 1
                )));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = Vec::with_capacity(templates.len() * config.copies_per_class);
    let mut labels = Vec::with_capacity(graphs.capacity());
    for (class, t) in templates.iter().enumerate() {
        for _ in 0..config.copies_per_class {
            graphs.push(t.permute(&VertexPermutation::random(ORDER, &mut rng))?);
            labels.push(class);
        }
    }
    DatasetBundle::new(
        "Paulus25",
        graphs,
        None,
        labels,
        Provenance {
            source: Source::Generated,
            seed: Some(seed),
        },
    )
}

fn parse_blocks(text: &str, source: &Path) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut rows: Vec<(usize, Vec<bool>)> = Vec::new();
    let lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    for (line, content) in lines.chain(std::iter::once((0, ""))) {
        if content.is_empty() {
            if !rows.is_empty() {
                graphs.push(block_to_graph(&rows, source)?);
                rows.clear();
            }
            continue;
        }
        let row: Vec<bool> = content
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::format(source, line, format!("unexpected character {other:?}"))),
            })
            .collect::<Result<_>>()?;
        if row.len() != ORDER {
            return Err(Error::format(
                source,
                line,
                format!("row has {} entries, expected {ORDER}", row.len()),
            ));
        }
        rows.push((line, row));
    }
    Ok(graphs)
}

fn block_to_graph(rows: &[(usize, Vec<bool>)], source: &Path) -> Result<Graph> {
    let first = rows[0].0;
    if rows.len() != ORDER {
        return Err(Error::format(
            source,
            first,
            format!("block has {} rows, expected {ORDER}", rows.len()),
        ));
    }
    let mut edges = Vec::new();
    for (i, (line, row)) in rows.iter().enumerate() {
        if row[i] {
            return Err(Error::format(source, *line, "non-zero diagonal entry"));
        }
        for j in 0..ORDER {
            if row[j] != rows[j].1[i] {
                return Err(Error::format(
                    source,
                    *line,
                    format!("matrix is not symmetric at column {}", j + 1),
                ));
            }
            if row[j] && i < j {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::new(ORDER, &edges)?;
    for u in 0..ORDER {
        if g.degree(u) != DEGREE {
            return Err(Error::format(
                source,
                rows[u].0,
                format!("vertex {} has degree {}, expected {DEGREE}", u + 1, g.degree(u)),
            ));
        }
        for v in u + 1..ORDER {
            let common = g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count();
            let want = if g.has_edge(u, v) { LAMBDA } else { MU };
            if common != want {
                return Err(Error::format(
                    source,
                    first,
                    format!(
                        "vertices {} and {} share {common} neighbours, expected {want}",
                        u + 1,
                        v + 1
                    ),
                ));
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_loads() {
        let b = paulus_from_str(PAULUS_FIXTURE, Path::new("fixture"), &PaulusConfig::default(), 5).unwrap();
        assert!(b.num_classes() >= 2);
        assert!(b.graphs().iter().all(|g| g.num_edges() == 150));
    }

    #[test]
    fn rejects_non_srg_block() {
        let mut text: Vec<String> = PAULUS_FIXTURE
            .split("\n\n")
            .next()
            .unwrap()
            .lines()
            .map(str::to_string)
            .collect();
        // Swap one edge for a non-edge on both sides: degrees stay, SRG breaks.
        let a = text.clone();
        let (i, j, k) = (0..ORDER)
            .flat_map(|i| (0..ORDER).flat_map(move |j| (0..ORDER).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| {
                let at = |r: usize, c: usize| a[r].as_bytes()[c] == b'1';
                j != k && at(i, j) && !at(i, k) && i != k
            })
            .unwrap();
        let flip = |rows: &mut Vec<String>, r: usize, c: usize| {
            let mut bytes = rows[r].clone().into_bytes();
            bytes[c] = if bytes[c] == b'1' { b'0' } else { b'1' };
            rows[r] = String::from_utf8(bytes).unwrap();
        };
        for (r, c) in [(i, j), (j, i), (i, k), (k, i)] {
            flip(&mut text, r, c);
        }
        let body = text.join("\n");
        let doubled = format!("{body}\n\n{body}\n");
        assert!(paulus_from_str(&doubled, Path::new("bad"), &PaulusConfig::default(), 0).is_err());
    }
}
