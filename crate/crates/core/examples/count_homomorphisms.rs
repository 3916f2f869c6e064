//! Counts homomorphisms from a few small patterns into the Petersen graph
//! with every counter the library has, plus a weighted count and a density.
//!
//! cargo run --example count_homomorphisms

use homcount::graph::Graph;
use homcount::hom::{density, hom, hom_brute, hom_cycle, hom_tree, hom_treedec, VertexWeights};
use homcount::pattern::Pattern;

fn petersen() -> homcount::Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges)
}

fn main() -> homcount::Result<()> {
    let g = petersen()?;
    let unit = VertexWeights::Unit;
    println!("Petersen graph: {} vertices, {} edges", g.num_vertices(), g.num_edges());

    let p4 = Graph::path(4);
    println!(
        "hom(P4)  tree DP {}  brute force {}",
        hom_tree(&p4, &g, &unit)?,
        hom_brute(&p4, &g, &unit)?
    );
    // Girth 5: no triangles or 4-cycles beyond backtracking walks.
    for k in 3..=6 {
        println!("hom(C{k})  closed walks {}", hom_cycle(k, &g, &unit)?);
    }

    let diamond = Pattern::custom(Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])?)?;
    let td = diamond.decomposition()?;
    println!(
        "hom(diamond)  width-{} decomposition {}  dispatch {}",
        td.width(),
        hom_treedec(diamond.graph(), &td, &g, &unit)?,
        hom(&diamond, &g, &unit)?
    );

    let w = VertexWeights::Real((0..10).map(|v| if v < 5 { 1.0 } else { 0.5 }).collect());
    let edge = Pattern::path(2)?;
    println!("weighted hom(edge) {}", hom(&edge, &g, &w)?);
    println!("density t(P4) {:.6}", density(&Pattern::path(4)?, &g, &unit)?);
    Ok(())
}
