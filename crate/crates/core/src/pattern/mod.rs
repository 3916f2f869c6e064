//! Pattern families: trees, cycles, stars, paths and custom graphs.

mod canon;
mod decomposition;
mod treewidth;

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::Serialize;

pub use canon::{canonical_graph_code, canonical_tree_code};
pub use decomposition::{build_nice_decomposition, NodeKind, TreeDecomposition};
pub use treewidth::{elimination_width, treewidth_exact, Treewidth, MAX_TREEWIDTH_VERTICES};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern size any enumerator accepts.
pub const MAX_PATTERN_SIZE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Tree,
    Cycle,
    Star,
    Path,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Tree => "tree",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Path => "path",
            Family::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// A small pattern graph `F` with its family tag and canonical code.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    family: Family,
    canonical_code: String,
    decomposition: Option<TreeDecomposition>,
}

impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.canonical_code == other.canonical_code
    }
}

impl Eq for Pattern {}

impl Pattern {
    /// Tree pattern; the graph must be a tree.
    pub fn tree(graph: Graph) -> Result<Self> {
        let canonical_code = canonical_tree_code(&graph)?;
        Ok(Pattern {
            graph,
            family: Family::Tree,
            canonical_code,
            decomposition: None,
        })
    }

    /// The cycle `C_k` for `k >= 3`, or the single edge for `k = 2`
    /// (closed walks of length two).
    pub fn cycle(k: usize) -> Result<Self> {
        let graph = match k {
            2 => Graph::path(2),
            _ => Graph::cycle(k)?,
        };
        Ok(Pattern {
            canonical_code: canonical_graph_code(&graph),
            graph,
            family: Family::Cycle,
            decomposition: None,
        })
    }

    /// Star with `leaves` leaves (`leaves + 1` vertices).
    pub fn star(leaves: usize) -> Result<Self> {
        if leaves == 0 {
            return Err(Error::Parameter("a star needs at least one leaf".into()));
        }
        let graph = Graph::star(leaves);
        Ok(Pattern {
            canonical_code: canonical_tree_code(&graph)?,
            graph,
            family: Family::Star,
            decomposition: None,
        })
    }

    /// Path on `n >= 2` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter("a path pattern needs at least two vertices".into()));
        }
        let graph = Graph::path(n);
        Ok(Pattern {
            canonical_code: canonical_tree_code(&graph)?,
            graph,
            family: Family::Path,
            decomposition: None,
        })
    }

    /// Arbitrary pattern; carries an optimal nice tree decomposition.
    pub fn custom(graph: Graph) -> Result<Self> {
        let decomposition = TreeDecomposition::optimal(&graph)?;
        Ok(Pattern {
            canonical_code: canonical_graph_code(&graph),
            graph,
            family: Family::Custom,
            decomposition: Some(decomposition),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn size(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn canonical_code(&self) -> &str {
        &self.canonical_code
    }

    /// Stored decomposition (custom patterns) or a freshly computed optimal one.
    pub fn decomposition(&self) -> Result<TreeDecomposition> {
        match &self.decomposition {
            Some(td) => Ok(td.clone()),
            None => TreeDecomposition::optimal(&self.graph),
        }
    }

    /// Short column-friendly name such as `tree5#2`, `cycle4` or `star3`.
    pub fn label(&self, index_in_size: Option<usize>) -> String {
        match (self.family, index_in_size) {
            (Family::Tree | Family::Custom, Some(i)) => format!("{}{}#{}", self.family, self.size(), i),
            (Family::Cycle, _) if self.size() == 2 => "edge".to_string(),
            _ => format!("{}{}", self.family, self.size()),
        }
    }

    pub fn to_record(&self) -> PatternRecord {
        PatternRecord {
            family: self.family,
            size: self.size(),
            edges: self.graph.edge_list(),
            canonical_code: self.canonical_code.clone(),
        }
    }
}

/// JSON view of a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternRecord {
    pub family: Family,
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
    pub canonical_code: String,
}

fn check_max(max_size: usize) -> Result<()> {
    if max_size > MAX_PATTERN_SIZE {
        return Err(Error::TooLarge(format!(
            "pattern size {max_size} exceeds the catalog limit of {MAX_PATTERN_SIZE}"
        )));
    }
    Ok(())
}

/// All free trees with `2..=max_size` vertices, one per isomorphism class,
/// ordered by (size, canonical code).
///
/// Trees of size `k + 1` are grown from trees of size `k` by attaching a
/// leaf at every vertex and keeping one representative per AHU code.
pub fn enumerate_trees(max_size: usize) -> Result<Vec<Pattern>> {
    if max_size < 2 {
        return Err(Error::Parameter(format!("max_size must be at least 2, got {max_size}")));
    }
    check_max(max_size)?;
    let mut out = Vec::new();
    let mut layer = vec![Pattern::tree(Graph::path(2))?];
    for size in 2..=max_size {
        layer.sort_by(|a, b| a.canonical_code.cmp(&b.canonical_code));
        if size < max_size {
            let mut seen = BTreeSet::new();
            let mut next = Vec::new();
            for p in &layer {
                let edges = p.graph.edge_list();
                for v in 0..size {
                    let mut grown = edges.clone();
                    grown.push((v, size));
                    let g = Graph::new(size + 1, &grown)?;
                    let code = canonical_tree_code(&g)?;
                    if seen.insert(code.clone()) {
                        next.push(Pattern {
                            graph: g,
                            family: Family::Tree,
                            canonical_code: code,
                            decomposition: None,
                        });
                    }
                }
            }
            out.append(&mut layer);
            layer = next;
        } else {
            out.append(&mut layer);
        }
    }
    Ok(out)
}

/// The single edge followed by the cycles `C_3..=C_max_size`.
pub fn enumerate_cycles(max_size: usize) -> Result<Vec<Pattern>> {
    if max_size < 2 {
        return Err(Error::Parameter(format!("max_size must be at least 2, got {max_size}")));
    }
    check_max(max_size)?;
    (2..=max_size).map(Pattern::cycle).collect()
}

/// Stars `S_1..S_{max_size-1}`, i.e. sizes `2..=max_size`.
pub fn enumerate_stars(max_size: usize) -> Result<Vec<Pattern>> {
    if max_size < 2 {
        return Err(Error::Parameter(format!("max_size must be at least 2, got {max_size}")));
    }
    check_max(max_size)?;
    (1..max_size).map(Pattern::star).collect()
}

/// Paths `P_2..=P_max_size`.
pub fn enumerate_paths(max_size: usize) -> Result<Vec<Pattern>> {
    if max_size < 2 {
        return Err(Error::Parameter(format!("max_size must be at least 2, got {max_size}")));
    }
    check_max(max_size)?;
    (2..=max_size).map(Pattern::path).collect()
}

/// Parses graphs in block format: a vertex count line followed by `u v`
/// edge lines (0-based), blocks separated by blank lines. Lines starting
/// with `#` are ignored.
pub fn parse_graph_blocks(text: &str, source: &Path) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut current: Option<(usize, Vec<(usize, usize)>, usize)> = None;
    let finish = |block: Option<(usize, Vec<(usize, usize)>, usize)>, graphs: &mut Vec<Graph>| -> Result<()> {
        if let Some((n, edges, line)) = block {
            let g = Graph::new(n, &edges).map_err(|e| Error::format(source, line, e.to_string()))?;
            graphs.push(g);
        }
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            finish(current.take(), &mut graphs)?;
            continue;
        }
        let tokens: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::format(source, line_no, format!("expected an integer, found {t:?}")))
            })
            .collect::<Result<_>>()?;
        match (&mut current, tokens.as_slice()) {
            (None, [n]) => current = Some((*n, Vec::new(), line_no)),
            (None, _) => {
                return Err(Error::format(source, line_no, "expected a vertex count"));
            }
            (Some((_, edges, _)), [u, v]) => edges.push((*u, *v)),
            (Some(_), _) => {
                return Err(Error::format(source, line_no, "expected an edge line `u v`"));
            }
        }
    }
    finish(current, &mut graphs)?;
    Ok(graphs)
}

/// Reads a custom pattern file into [`Family::Custom`] patterns.
pub fn load_custom_patterns(path: &Path) -> Result<Vec<Pattern>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph_blocks(&text, path)?
        .into_iter()
        .map(|g| {
            if g.num_vertices() > MAX_PATTERN_SIZE {
                return Err(Error::TooLarge(format!(
                    "custom pattern with {} vertices exceeds {MAX_PATTERN_SIZE}",
                    g.num_vertices()
                )));
            }
            Pattern::custom(g)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts_by_size(patterns: &[Pattern]) -> Vec<usize> {
        let max = patterns.iter().map(Pattern::size).max().unwrap();
        (2..=max)
            .map(|k| patterns.iter().filter(|p| p.size() == k).count())
            .collect()
    }

    #[test]
    fn thirteen_trees_up_to_six() {
        let trees = enumerate_trees(6).unwrap();
        assert_eq!(trees.len(), 13);
        assert_eq!(counts_by_size(&trees), vec![1, 1, 2, 3, 6]);
    }

    #[test]
    fn tree_counts_up_to_ten() {
        let trees = enumerate_trees(10).unwrap();
        assert_eq!(counts_by_size(&trees), vec![1, 1, 2, 3, 6, 11, 23, 47, 106]);
        let codes: BTreeSet<_> = trees.iter().map(Pattern::canonical_code).collect();
        assert_eq!(codes.len(), trees.len());
        for t in &trees {
            assert!(t.graph().is_tree());
        }
    }

    #[test]
    fn tree_order_is_size_then_code() {
        let trees = enumerate_trees(7).unwrap();
        for w in trees.windows(2) {
            assert!((w[0].size(), w[0].canonical_code()) < (w[1].size(), w[1].canonical_code()));
        }
    }

    #[test]
    fn smallest_catalogs() {
        let trees = enumerate_trees(2).unwrap();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].graph().edge_list(), vec![(0, 1)]);
        assert!(enumerate_trees(1).is_err());
        assert!(matches!(enumerate_trees(13), Err(Error::TooLarge(_))));
    }

    #[test]
    fn cycle_catalog() {
        let cycles = enumerate_cycles(8).unwrap();
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles[0].graph().num_edges(), 1);
        for c in &cycles[1..] {
            assert_eq!(c.graph().num_edges(), c.size());
            assert!((0..c.size()).all(|v| c.graph().degree(v) == 2));
        }
        let small = enumerate_cycles(3).unwrap();
        assert_eq!(small.iter().map(Pattern::size).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(enumerate_cycles(2).unwrap().len(), 1);
        assert!(enumerate_cycles(1).is_err());
    }

    #[test]
    fn stars_and_paths() {
        let stars = enumerate_stars(4).unwrap();
        assert_eq!(stars.iter().map(Pattern::size).collect::<Vec<_>>(), vec![2, 3, 4]);
        for s in &stars {
            let k = s.size() - 1;
            let mut expected = vec![1; k];
            expected.push(k);
            assert_eq!(s.graph().degree_sequence(), expected);
        }
        let paths = enumerate_paths(4).unwrap();
        assert_eq!(paths.iter().map(Pattern::size).collect::<Vec<_>>(), vec![2, 3, 4]);
    }

    #[test]
    fn tree_and_cycle_widths() {
        for t in enumerate_trees(8).unwrap() {
            assert_eq!(treewidth_exact(t.graph()).unwrap().width, 1);
        }
        for c in &enumerate_cycles(8).unwrap()[1..] {
            assert_eq!(treewidth_exact(c.graph()).unwrap().width, 2);
            let td = c.decomposition().unwrap();
            td.validate(c.graph()).unwrap();
        }
    }

    #[test]
    fn parses_blocks() {
        let text = "# two patterns\n3\n0 1\n1 2\n\n4\n0 1\n1 2\n2 3\n3 0\n";
        let graphs = parse_graph_blocks(text, Path::new("mem")).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].num_edges(), 4);
    }

    #[test]
    fn block_errors_carry_line_numbers() {
        let err = parse_graph_blocks("3\n0 x\n", Path::new("f")).unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
        let err = parse_graph_blocks("2\n0 0\n", Path::new("f")).unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }));
    }
}
