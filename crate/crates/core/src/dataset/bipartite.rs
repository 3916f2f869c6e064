//! Random bipartite graphs (class 0) against Erdős–Rényi graphs (class 1).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{DatasetBundle, Provenance, Source};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BipartiteConfig {
    pub num_graphs: usize,
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Edge probability across the two sides of the bipartite graphs.
    pub p_bipartite: f64,
    /// Edge probability of the unrestricted graphs.
    pub p_er: f64,
}

impl Default for BipartiteConfig {
    fn default() -> Self {
        BipartiteConfig {
            num_graphs: 200,
            min_vertices: 40,
            max_vertices: 100,
            p_bipartite: 0.2,
            p_er: 0.1,
        }
    }
}

/// Give up after this many bipartite Erdős–Rényi draws in a row.
const MAX_REJECTIONS: usize = 1000;

/// The first `num_graphs / 2` graphs split `n` into sides of `⌈n/2⌉` and
/// `⌊n/2⌋` and join each cross pair with probability `p_bipartite`; the rest
/// are `G(n, p_er)` conditioned on containing an odd cycle.
pub fn gen_bipartite_er(config: &BipartiteConfig, seed: u64) -> Result<DatasetBundle> {
    if config.num_graphs < 2 {
        return Err(Error::Parameter("need at least two graphs".into()));
    }
    if config.min_vertices < 3 || config.min_vertices > config.max_vertices {
        return Err(Error::Parameter(format!(
            "vertex range {}..={} must start at 3 or more and be non-empty",
            config.min_vertices, config.max_vertices
        )));
    }
    for p in [config.p_bipartite, config.p_er] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Parameter(format!("edge probability {p} outside [0, 1]")));
        }
    }
    if config.p_er == 0.0 {
        return Err(Error::Parameter("p_er = 0 never yields a non-bipartite graph".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bipartite = config.num_graphs / 2;
    let mut graphs = Vec::with_capacity(config.num_graphs);
    let mut labels = Vec::with_capacity(config.num_graphs);
    for i in 0..config.num_graphs {
        let g = if i < bipartite {
            let n = rng.gen_range(config.min_vertices..=config.max_vertices);
            random_bipartite(n, config.p_bipartite, &mut rng)?
        } else {
            let mut attempts = 0;
            loop {
                let n = rng.gen_range(config.min_vertices..=config.max_vertices);
                let g = erdos_renyi(n, config.p_er, &mut rng)?;
                if !g.is_bipartite() {
                    break g;
                }
                attempts += 1;
                if attempts == MAX_REJECTIONS {
                    return Err(Error::Parameter(format!(
                        "{MAX_REJECTIONS} bipartite draws in a row at p = {}",
                        config.p_er
                    )));
                }
            }
        };
        graphs.push(g);
        labels.push(usize::from(i >= bipartite));
    }
    DatasetBundle::new(
        "bipartite-ER",
        graphs,
        None,
        labels,
        Provenance {
            source: Source::Generated,
            seed: Some(seed),
        },
    )
}

fn erdos_renyi<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

fn random_bipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let left = n.div_ceil(2);
    let mut edges = Vec::new();
    for u in 0..left {
        for v in left..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_match_bipartiteness() {
        let config = BipartiteConfig {
            num_graphs: 20,
            ..BipartiteConfig::default()
        };
        let b = gen_bipartite_er(&config, 11).unwrap();
        assert_eq!(b.len(), 20);
        for (g, &l) in b.graphs().iter().zip(b.labels()) {
            assert_eq!(g.is_bipartite(), l == 0);
            assert!((40..=100).contains(&g.num_vertices()));
        }
        assert_eq!(b, gen_bipartite_er(&config, 11).unwrap());
        assert_ne!(b, gen_bipartite_er(&config, 12).unwrap());
    }

    #[test]
    fn rejects_bad_parameters() {
        let bad = BipartiteConfig {
            p_er: 1.5,
            ..BipartiteConfig::default()
        };
        assert!(gen_bipartite_er(&bad, 0).is_err());
    }
}
