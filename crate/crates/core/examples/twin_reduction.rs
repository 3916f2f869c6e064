//! Twin reduction on a complete bipartite graph: each side collapses to one
//! weighted vertex and every homomorphism number survives.
//!
//! cargo run --example twin_reduction

use homcount::graph::{Graph, WeightedGraph};
use homcount::hom::{hom, VertexWeights};
use homcount::pattern::{enumerate_cycles, enumerate_trees};

fn main() -> homcount::Result<()> {
    let (a, b) = (4, 6);
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    let k46 = WeightedGraph::new(Graph::new(a + b, &edges)?, vec![1.0; a + b])?;
    let reduced = k46.twin_reduce();
    println!(
        "K{a},{b}: {} vertices -> {} vertices with weights {:?}",
        k46.graph().num_vertices(),
        reduced.graph().num_vertices(),
        reduced.weights()
    );
    let (w, rw) = (VertexWeights::from(&k46), VertexWeights::from(&reduced));
    for p in enumerate_trees(5)?.iter().chain(&enumerate_cycles(6)?) {
        let before = hom(p, k46.graph(), &w)?.as_f64();
        let after = hom(p, reduced.graph(), &rw)?.as_f64();
        println!("{:<12} {before:>12} {after:>12}", p.label(None));
        assert_eq!(before, after);
    }
    Ok(())
}
