//! Graph-level embeddings: one column per (pattern, φ) pair, one row per graph.

use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::DatasetBundle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{hom_values, HomValue, PhiFunction, VertexWeights};
use crate::pattern::{enumerate_cycles, enumerate_trees, load_custom_patterns, Pattern};

/// Which patterns make up the embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// All non-isomorphic trees with `2..=max_size` vertices.
    Tree { max_size: usize },
    /// Cycles of length `2..=max_size`, length 2 being the single edge.
    Cycle { max_size: usize },
    /// Graphs read from a pattern file.
    Custom { path: PathBuf },
}

impl FamilySpec {
    pub fn patterns(&self) -> Result<Vec<Pattern>> {
        match self {
            FamilySpec::Tree { max_size } => enumerate_trees(*max_size),
            FamilySpec::Cycle { max_size } => enumerate_cycles(*max_size),
            FamilySpec::Custom { path } => load_custom_patterns(path),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Tree { max_size } => write!(f, "tree:{max_size}"),
            FamilySpec::Cycle { max_size } => write!(f, "cycle:{max_size}"),
            FamilySpec::Custom { path } => write!(f, "custom:{}", path.display()),
        }
    }
}

/// Parses `tree:K`, `cycle:K` or `custom:PATH` (`trees:K`, `cycles:K` also work).
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Config(format!("family {s:?} is not of the form kind:arg")))?;
        let size = || {
            arg.parse::<usize>()
                .map_err(|_| Error::Config(format!("family size {arg:?} is not an integer")))
        };
        match kind {
            "tree" | "trees" => Ok(FamilySpec::Tree { max_size: size()? }),
            "cycle" | "cycles" => Ok(FamilySpec::Cycle { max_size: size()? }),
            "custom" => Ok(FamilySpec::Custom { path: arg.into() }),
            _ => Err(Error::Config(format!(
                "unknown family {kind:?}; expected tree, cycle or custom"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbedConfig {
    pub family: FamilySpec,
    /// Encodings to use; `None` picks [`default_phis`] for the dataset.
    pub phis: Option<Vec<PhiFunction>>,
    /// Divide each count by `(Σ_v φ(x(v)))^|V(F)|`.
    pub density: bool,
    /// Apply `sign(v) · ln(1 + |v|)` to every entry.
    pub log1p: bool,
}

impl Default for EmbedConfig {
    fn default() -> Self {
        EmbedConfig {
            family: FamilySpec::Tree { max_size: 6 },
            phis: None,
            density: false,
            log1p: false,
        }
    }
}

/// `{1}` for unlabelled data, `{1, x_0, …, x_{p-1}}` otherwise.
pub fn default_phis(feature_dim: usize) -> Vec<PhiFunction> {
    std::iter::once(PhiFunction::ConstantOne)
        .chain((0..feature_dim).map(PhiFunction::coordinate))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnMeta {
    pub pattern: String,
    pub canonical_code: String,
    pub phi: String,
    pub density: bool,
    /// Some graph overflowed exact arithmetic in this column.
    pub promoted: bool,
}

impl ColumnMeta {
    pub fn name(&self) -> String {
        format!("{}:{}", self.pattern, self.phi)
    }
}

/// Row-major embedding, columns ordered pattern by pattern, φ within pattern.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingMatrix {
    rows: Vec<Vec<f64>>,
    columns: Vec<ColumnMeta>,
}

impl EmbeddingMatrix {
    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn columns(&self) -> &[ColumnMeta] {
        &self.columns
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn into_rows(self) -> Vec<Vec<f64>> {
        self.rows
    }
}

/// Pattern labels `tree5#2`, `cycle4`, … numbered within each size.
fn pattern_labels(patterns: &[Pattern]) -> Vec<String> {
    let mut seen: std::collections::HashMap<(String, usize), usize> = Default::default();
    let mut totals: std::collections::HashMap<(String, usize), usize> = Default::default();
    for p in patterns {
        *totals.entry((p.family().to_string(), p.size())).or_default() += 1;
    }
    patterns
        .iter()
        .map(|p| {
            let key = (p.family().to_string(), p.size());
            if totals[&key] > 1 {
                let i = seen.entry(key).or_default();
                *i += 1;
                p.label(Some(*i))
            } else {
                p.label(None)
            }
        })
        .collect()
}

/// One graph's row plus, per column, whether exact arithmetic overflowed.
pub fn embed_graph(
    patterns: &[Pattern],
    phis: &[PhiFunction],
    graph: &Graph,
    features: Option<&[Vec<f64>]>,
    density: bool,
    log1p: bool,
) -> Result<(Vec<f64>, Vec<bool>)> {
    let mut row = Vec::with_capacity(patterns.len() * phis.len());
    let mut flags = Vec::with_capacity(row.capacity());
    let mut per_phi = Vec::with_capacity(phis.len());
    for phi in phis {
        let weights = match (phi, features) {
            (PhiFunction::ConstantOne, _) => VertexWeights::Unit,
            (_, Some(x)) => VertexWeights::Real(x.iter().map(|r| phi.apply(r)).collect::<Result<Vec<_>>>()?),
            (_, None) => {
                return Err(Error::Config(format!(
                    "encoding {} needs vertex features but the graph has none",
                    phi.id()
                )))
            }
        };
        let total = match &weights {
            VertexWeights::Unit => graph.num_vertices() as f64,
            VertexWeights::Real(w) => w.iter().sum(),
        };
        per_phi.push((hom_values(patterns, graph, &weights)?, total));
    }
    for (pi, p) in patterns.iter().enumerate() {
        for (values, total) in &per_phi {
            let v: HomValue = values[pi];
            let mut x = v.as_f64();
            if density {
                // hom is homogeneous of degree |V(F)| in the weights.
                x = if *total == 0.0 {
                    0.0
                } else {
                    x / total.powi(p.size() as i32)
                };
            }
            if log1p {
                x = x.signum() * x.abs().ln_1p();
            }
            row.push(x);
            flags.push(v.is_promoted());
        }
    }
    Ok((row, flags))
}

/// Embeds every graph of `bundle`, in parallel over graphs.
pub fn embed_dataset(bundle: &DatasetBundle, config: &EmbedConfig) -> Result<EmbeddingMatrix> {
    let patterns = config.family.patterns()?;
    embed_with_patterns(bundle, &patterns, config)
}

pub fn embed_with_patterns(
    bundle: &DatasetBundle,
    patterns: &[Pattern],
    config: &EmbedConfig,
) -> Result<EmbeddingMatrix> {
    let phis = config
        .phis
        .clone()
        .unwrap_or_else(|| default_phis(bundle.feature_dim()));
    if phis.is_empty() || patterns.is_empty() {
        return Err(Error::Config(
            "embedding needs at least one pattern and one encoding".into(),
        ));
    }
    let results: Vec<(Vec<f64>, Vec<bool>)> = (0..bundle.len())
        .into_par_iter()
        .map(|i| {
            let features = bundle.features().map(|f| f[i].as_slice());
            embed_graph(
                patterns,
                &phis,
                &bundle.graphs()[i],
                features,
                config.density,
                config.log1p,
            )
        })
        .collect::<Result<_>>()?;
    let labels = pattern_labels(patterns);
    let mut columns = Vec::with_capacity(patterns.len() * phis.len());
    for (p, label) in patterns.iter().zip(&labels) {
        for phi in &phis {
            columns.push(ColumnMeta {
                pattern: label.clone(),
                canonical_code: p.canonical_code().to_string(),
                phi: phi.id(),
                density: config.density,
                promoted: false,
            });
        }
    }
    let mut rows = Vec::with_capacity(results.len());
    for (row, flags) in results {
        for (c, f) in columns.iter_mut().zip(flags) {
            c.promoted |= f;
        }
        rows.push(row);
    }
    Ok(EmbeddingMatrix { rows, columns })
}

/// Per-column standardisation fitted on training rows only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalerParams {
    pub mean: Vec<f64>,
    /// Population standard deviation; zero-variance columns store 1.
    pub std: Vec<f64>,
}

impl ScalerParams {
    pub fn fit(rows: &[Vec<f64>]) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::Domain("cannot fit a scaler on zero rows".into()))?;
        let d = first.len();
        let n = rows.len() as f64;
        let mut mean = vec![0.0; d];
        for r in rows {
            if r.len() != d {
                return Err(Error::Dimension {
                    expected: d,
                    actual: r.len(),
                });
            }
            for (m, x) in mean.iter_mut().zip(r) {
                *m += x;
            }
        }
        mean.iter_mut().for_each(|m| *m /= n);
        let mut var = vec![0.0; d];
        for r in rows {
            for ((v, x), m) in var.iter_mut().zip(r).zip(&mean) {
                *v += (x - m) * (x - m);
            }
        }
        let std = var
            .into_iter()
            .map(|v| {
                let s = (v / n).sqrt();
                if s > 0.0 && s.is_finite() {
                    s
                } else {
                    1.0
                }
            })
            .collect();
        Ok(ScalerParams { mean, std })
    }

    pub fn transform(&self, rows: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        rows.iter()
            .map(|r| {
                if r.len() != self.mean.len() {
                    return Err(Error::Dimension {
                        expected: self.mean.len(),
                        actual: r.len(),
                    });
                }
                Ok(r.iter()
                    .zip(&self.mean)
                    .zip(&self.std)
                    .map(|((x, m), s)| (x - m) / s)
                    .collect())
            })
            .collect()
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes `graph_id,label,<columns…>` to `path` and the column metadata plus
/// `config` to `path` with a `.json` extension. Returns the sidecar path.
pub fn write_embedding<C: Serialize>(
    matrix: &EmbeddingMatrix,
    labels: &[usize],
    path: &Path,
    config: &C,
) -> Result<PathBuf> {
    if labels.len() != matrix.num_rows() {
        return Err(Error::Dimension {
            expected: matrix.num_rows(),
            actual: labels.len(),
        });
    }
    let mut out = Vec::new();
    let header: Vec<String> = ["graph_id".to_string(), "label".to_string()]
        .into_iter()
        .chain(matrix.columns.iter().map(|c| csv_field(&c.name())))
        .collect();
    writeln!(out, "{}", header.join(",")).expect("writing to memory");
    for (i, (row, label)) in matrix.rows.iter().zip(labels).enumerate() {
        write!(out, "{i},{label}").expect("writing to memory");
        for x in row {
            write!(out, ",{x}").expect("writing to memory");
        }
        out.push(b'\n');
    }
    std::fs::write(path, out).map_err(|e| Error::io(path, e))?;
    let sidecar = path.with_extension("json");
    let meta = serde_json::json!({ "config": config, "columns": matrix.columns });
    std::fs::write(&sidecar, serde_json::to_string_pretty(&meta)?).map_err(|e| Error::io(&sidecar, e))?;
    Ok(sidecar)
}

/// Reads a CSV written by [`write_embedding`] back into rows and labels.
pub fn read_embedding(path: &Path) -> Result<(Vec<Vec<f64>>, Vec<usize>)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.starts_with("graph_id,label") => {}
        _ => return Err(Error::format(path, 1, "missing graph_id,label header")),
    }
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let _id = fields.next();
        let label = fields
            .next()
            .and_then(|l| l.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::format(path, i + 1, "bad label field"))?;
        let row = fields
            .map(|f| {
                f.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::format(path, i + 1, format!("cannot parse {f:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first().map(Vec::len) {
            if first != row.len() {
                return Err(Error::format(
                    path,
                    i + 1,
                    format!("{} values, expected {first}", row.len()),
                ));
            }
        }
        rows.push(row);
        labels.push(label);
    }
    Ok((rows, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{Provenance, Source};

    fn bundle(features: bool) -> DatasetBundle {
        let graphs = vec![Graph::complete(3), Graph::path(3)];
        let x = features.then(|| {
            vec![
                vec![vec![1.0], vec![0.0], vec![1.0]],
                vec![vec![0.5], vec![0.5], vec![0.0]],
            ]
        });
        DatasetBundle::new(
            "toy",
            graphs,
            x,
            vec![0, 1],
            Provenance {
                source: Source::Generated,
                seed: None,
            },
        )
        .unwrap()
    }

    #[test]
    fn family_spec_round_trips() {
        for s in ["tree:6", "cycle:8", "custom:pats.txt"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert!("tree".parse::<FamilySpec>().is_err());
        assert!("wheel:3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn cycle_embedding_values() {
        let config = EmbedConfig {
            family: FamilySpec::Cycle { max_size: 3 },
            ..EmbedConfig::default()
        };
        let m = embed_dataset(&bundle(false), &config).unwrap();
        // K3: edge 6, triangle 6. P3: edge 4, triangle 0.
        assert_eq!(m.rows(), &[vec![6.0, 6.0], vec![4.0, 0.0]]);
        assert_eq!(m.columns()[0].name(), "edge:one");
    }

    #[test]
    fn features_add_coordinate_columns_and_density() {
        let config = EmbedConfig {
            family: FamilySpec::Cycle { max_size: 2 },
            density: true,
            ..EmbedConfig::default()
        };
        let m = embed_dataset(&bundle(true), &config).unwrap();
        assert_eq!(m.num_cols(), 2);
        // K3 with weights (1,0,1): one weighted edge pair, both directions,
        // total weight 2 -> 2 / 4.
        assert!((m.rows()[0][1] - 0.5).abs() < 1e-12);
        assert!((m.rows()[0][0] - 6.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn coordinate_without_features_is_a_config_error() {
        let config = EmbedConfig {
            phis: Some(vec![PhiFunction::coordinate(0)]),
            ..EmbedConfig::default()
        };
        assert!(matches!(embed_dataset(&bundle(false), &config), Err(Error::Config(_))));
    }

    #[test]
    fn scaler_handles_constant_columns() {
        let rows = vec![vec![1.0, 5.0], vec![3.0, 5.0]];
        let s = ScalerParams::fit(&rows).unwrap();
        assert_eq!(s.std, vec![1.0, 1.0]);
        assert_eq!(s.transform(&rows).unwrap(), vec![vec![-1.0, 0.0], vec![1.0, 0.0]]);
        assert!(ScalerParams::fit(&[]).is_err());
    }

    #[test]
    fn csv_has_header_and_sidecar() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("e.csv");
        let m = embed_dataset(&bundle(false), &EmbedConfig::default()).unwrap();
        let sidecar = write_embedding(&m, &[0, 1], &path, &EmbedConfig::default()).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("graph_id,label,tree2:one,"));
        assert_eq!(text.lines().count(), 3);
        let meta: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(sidecar).unwrap()).unwrap();
        assert_eq!(meta["columns"].as_array().unwrap().len(), m.num_cols());
        let (rows, labels) = read_embedding(&path).unwrap();
        assert_eq!(rows, m.rows());
        assert_eq!(labels, vec![0, 1]);
    }
}
