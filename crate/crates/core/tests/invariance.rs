//! Counts and embeddings do not depend on how target vertices are numbered.

mod common;

use common::{random_graph, random_pattern, random_phi, relative_eq};
use homcount::dataset::{gen_csl, CslConfig};
use homcount::embed::{embed_dataset, EmbedConfig, FamilySpec};
use homcount::graph::{FeaturedGraph, VertexPermutation};
use homcount::hom::{convolution, HomValue};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn convolution_is_permutation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let n = rng.gen_range(2..=12);
        let g = random_graph(n, rng.gen_range(0.2..0.7), &mut rng);
        let dim = 3;
        let x: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..dim).map(|_| rng.gen_range(0.0..=1.0)).collect())
            .collect();
        let fg = FeaturedGraph::new(g, x).unwrap();
        let sigma = VertexPermutation::random(n, &mut rng);
        let pattern = random_pattern(&mut rng);
        let phi = random_phi(dim, &mut rng);
        let before = convolution(&pattern, &fg, &phi).unwrap();
        let after = convolution(&pattern, &fg.permute(&sigma).unwrap(), &phi).unwrap();
        match (before, after) {
            (HomValue::Exact(a), HomValue::Exact(b)) => assert_eq!(a, b),
            (a, b) => assert!(relative_eq(a.as_f64(), b.as_f64(), 1e-12), "{a} vs {b}"),
        }
    }
}

#[test]
fn embeddings_survive_relabelling() {
    let bundle = gen_csl(
        &CslConfig {
            copies_per_class: 2,
            ..CslConfig::default()
        },
        3,
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let shuffled = bundle
        .map_graphs(|_, g| Ok(VertexPermutation::random(g.num_vertices(), &mut rng)))
        .unwrap();
    for family in [FamilySpec::Tree { max_size: 6 }, FamilySpec::Cycle { max_size: 8 }] {
        let config = EmbedConfig {
            family,
            ..EmbedConfig::default()
        };
        assert_eq!(
            embed_dataset(&bundle, &config).unwrap(),
            embed_dataset(&shuffled, &config).unwrap()
        );
    }
}
