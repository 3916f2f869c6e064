//! Contracting twins (vertices with equal open neighbourhoods) while adding
//! their weights leaves every weighted homomorphism number unchanged.

mod common;

use common::{all_graphs, graph_with_twins};
use homcount::graph::Graph;
use homcount::hom::{hom_brute, VertexWeights};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn twin_reduction_preserves_weighted_counts() {
    let patterns: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    assert_eq!(patterns.len(), 1 + 2 + 4 + 11);
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..50 {
        let wg = graph_with_twins(&mut rng);
        let reduced = wg.twin_reduce();
        assert!(reduced.graph().num_vertices() <= wg.graph().num_vertices());
        let (w, rw) = (VertexWeights::from(&wg), VertexWeights::from(&reduced));
        for f in &patterns {
            let before = hom_brute(f, wg.graph(), &w).unwrap().as_f64();
            let after = hom_brute(f, reduced.graph(), &rw).unwrap().as_f64();
            assert_eq!(before, after, "{f:?}");
        }
    }
}

#[test]
fn reduction_is_idempotent_and_twin_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..50 {
        let reduced = graph_with_twins(&mut rng).twin_reduce();
        assert_eq!(reduced.twin_reduce(), reduced);
        let g = reduced.graph();
        for u in 0..g.num_vertices() {
            for v in u + 1..g.num_vertices() {
                assert_ne!(g.neighbors(u), g.neighbors(v));
            }
        }
        assert!(reduced.weights().iter().all(|&x| x > 0.0));
    }
}
