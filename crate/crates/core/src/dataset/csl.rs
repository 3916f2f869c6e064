//! Circular skip-link graphs: a cycle `C_n` plus chords `i ~ i ± R (mod n)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{DatasetBundle, Provenance, Source};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPermutation};
use crate::hom::{hom_cycles, VertexWeights};

pub const DEFAULT_CSL_SKIPS: [usize; 10] = [2, 3, 4, 5, 6, 9, 11, 12, 13, 16];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CslConfig {
    pub num_vertices: usize,
    pub skips: Vec<usize>,
    pub copies_per_class: usize,
}

impl Default for CslConfig {
    fn default() -> Self {
        CslConfig {
            num_vertices: 41,
            skips: DEFAULT_CSL_SKIPS.to_vec(),
            copies_per_class: 15,
        }
    }
}

/// Longest closed walk compared when certifying that the classes differ.
const CERTIFY_LEN: usize = 12;

fn skip_graph(n: usize, r: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(2 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, (i + r) % n));
    }
    Graph::new(n, &edges)
}

/// One class per skip, `copies_per_class` randomly relabelled copies each,
/// laid out class by class. Every template must be 4-regular and the
/// templates must have pairwise distinct closed-walk counts, which
/// certifies they are pairwise non-isomorphic.
pub fn gen_csl(config: &CslConfig, seed: u64) -> Result<DatasetBundle> {
    let n = config.num_vertices;
    if n < 5 {
        return Err(Error::Parameter(format!("CSL needs at least 5 vertices, got {n}")));
    }
    if config.skips.len() < 2 || config.copies_per_class == 0 {
        return Err(Error::Parameter(
            "CSL needs at least two skips and one copy per class".into(),
        ));
    }
    let mut templates = Vec::with_capacity(config.skips.len());
    let mut signatures: Vec<Vec<String>> = Vec::new();
    for &r in &config.skips {
        if r < 2 || r > n / 2 {
            return Err(Error::Parameter(format!("skip {r} outside 2..={}", n / 2)));
        }
        let g = skip_graph(n, r)?;
        if (0..n).any(|v| g.degree(v) != 4) {
            return Err(Error::Validation(format!(
                "skip {r} on {n} vertices does not give a 4-regular graph"
            )));
        }
        let sig: Vec<String> = hom_cycles(CERTIFY_LEN, &g, &VertexWeights::Unit)?
            .iter()
            .map(ToString::to_string)
            .collect();
        if let Some(k) = signatures.iter().position(|s| *s == sig) {
            return Err(Error::Validation(format!(
                "skips {} and {r} cannot be told apart by closed-walk counts",
                config.skips[k]
            )));
        }
        signatures.push(sig);
        templates.push(g);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = Vec::with_capacity(templates.len() * config.copies_per_class);
    let mut labels = Vec::with_capacity(graphs.capacity());
    for (class, template) in templates.iter().enumerate() {
        for _ in 0..config.copies_per_class {
            graphs.push(template.permute(&VertexPermutation::random(n, &mut rng))?);
            labels.push(class);
        }
    }
    DatasetBundle::new(
        "CSL",
        graphs,
        None,
        labels,
        Provenance {
            source: Source::Generated,
            seed: Some(seed),
        },
    )
}
