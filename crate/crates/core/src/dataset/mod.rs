//! Labelled graph datasets: TU-format ingestion and synthetic generators.

mod bipartite;
mod csl;
mod paulus;
mod tud;

use serde::{Deserialize, Serialize};

pub use bipartite::{gen_bipartite_er, BipartiteConfig};
pub use csl::{gen_csl, CslConfig, DEFAULT_CSL_SKIPS};
pub use paulus::{load_paulus, paulus_from_str, PaulusConfig, PAULUS_FIXTURE};
pub use tud::{find_tud_name, parse_tud, write_tud};

use crate::error::{Error, Result};
use crate::graph::{FeaturedGraph, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Tud,
    Generated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub source: Source,
    pub seed: Option<u64>,
}

/// Graphs with aligned class labels and optional per-vertex features.
#[derive(Clone, Debug, PartialEq)]
pub struct DatasetBundle {
    name: String,
    graphs: Vec<Graph>,
    features: Option<Vec<Vec<Vec<f64>>>>,
    labels: Vec<usize>,
    provenance: Provenance,
}

impl DatasetBundle {
    /// Validates alignment, contiguous non-empty classes and feature shape.
    pub fn new(
        name: impl Into<String>,
        graphs: Vec<Graph>,
        features: Option<Vec<Vec<Vec<f64>>>>,
        labels: Vec<usize>,
        provenance: Provenance,
    ) -> Result<Self> {
        if graphs.len() != labels.len() {
            return Err(Error::Validation(format!(
                "{} graphs but {} labels",
                graphs.len(),
                labels.len()
            )));
        }
        if let Some(max) = labels.iter().max() {
            let mut present = vec![false; max + 1];
            for &l in &labels {
                present[l] = true;
            }
            if let Some(missing) = present.iter().position(|p| !p) {
                return Err(Error::Validation(format!(
                    "labels are not contiguous: class {missing} is empty"
                )));
            }
        }
        if let Some(features) = &features {
            if features.len() != graphs.len() {
                return Err(Error::Validation(format!(
                    "{} graphs but {} feature matrices",
                    graphs.len(),
                    features.len()
                )));
            }
            let dim = features.iter().flatten().next().map_or(0, Vec::len);
            for (i, (g, x)) in graphs.iter().zip(features).enumerate() {
                if x.len() != g.num_vertices() || x.iter().any(|row| row.len() != dim) {
                    return Err(Error::Validation(format!(
                        "feature matrix of graph {i} does not match its {} vertices x {dim} features",
                        g.num_vertices()
                    )));
                }
                if x.iter().flatten().any(|v| !(0.0..=1.0).contains(v)) {
                    return Err(Error::Validation(format!("features of graph {i} leave [0, 1]")));
                }
            }
        }
        Ok(DatasetBundle {
            name: name.into(),
            graphs,
            features,
            labels,
            provenance,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn features(&self) -> Option<&[Vec<Vec<f64>>]> {
        self.features.as_deref()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Width of the per-vertex feature vectors, 0 when there are none.
    pub fn feature_dim(&self) -> usize {
        self.features
            .as_ref()
            .and_then(|f| f.iter().flatten().next())
            .map_or(0, Vec::len)
    }

    pub fn mean_vertices(&self) -> f64 {
        if self.graphs.is_empty() {
            return 0.0;
        }
        let total: usize = self.graphs.iter().map(Graph::num_vertices).sum();
        total as f64 / self.graphs.len() as f64
    }

    /// Graph `i` with its features, if the bundle has any.
    pub fn featured(&self, i: usize) -> Option<FeaturedGraph> {
        let features = self.features.as_ref()?;
        Some(
            FeaturedGraph::new(self.graphs[i].clone(), features[i].clone())
                .expect("bundle construction validated feature shapes"),
        )
    }

    /// The same bundle with every graph (and its features) relabelled.
    pub fn map_graphs<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, &Graph) -> Result<crate::graph::VertexPermutation>,
    {
        let mut graphs = Vec::with_capacity(self.graphs.len());
        let mut features = self.features.as_ref().map(|_| Vec::with_capacity(self.graphs.len()));
        for (i, g) in self.graphs.iter().enumerate() {
            let sigma = f(i, g)?;
            graphs.push(g.permute(&sigma)?);
            if let (Some(out), Some(x)) = (features.as_mut(), self.features.as_ref()) {
                let mut moved = vec![Vec::new(); x[i].len()];
                for (u, row) in x[i].iter().enumerate() {
                    moved[sigma.apply(u)] = row.clone();
                }
                out.push(moved);
            }
        }
        DatasetBundle::new(
            self.name.clone(),
            graphs,
            features,
            self.labels.clone(),
            self.provenance.clone(),
        )
    }
}
