//! Pairs of graphs that one pattern family cannot tell apart and another can:
//! the hexagon against two triangles, and two strongly regular graphs.
//!
//! cargo run --example indistinguishability

use std::path::Path;

use homcount::dataset::{paulus_from_str, PaulusConfig, PAULUS_FIXTURE};
use homcount::graph::Graph;
use homcount::hom::{hom, VertexWeights};
use homcount::pattern::{enumerate_cycles, enumerate_trees, Pattern};

fn compare(name: &str, patterns: &[Pattern], g: &Graph, h: &Graph) -> homcount::Result<()> {
    let w = VertexWeights::Unit;
    let mut differ = Vec::new();
    for p in patterns {
        if hom(p, g, &w)? != hom(p, h, &w)? {
            differ.push(p.label(None));
        }
    }
    if differ.is_empty() {
        println!("  {name}: all {} counts agree", patterns.len());
    } else {
        println!("  {name}: differ on {}", differ.join(", "));
    }
    Ok(())
}

fn main() -> homcount::Result<()> {
    let trees = enumerate_trees(6)?;
    let cycles = enumerate_cycles(8)?;

    let c6 = Graph::cycle(6)?;
    let two_c3 = Graph::cycle(3)?.disjoint_union(&Graph::cycle(3)?);
    println!("C6 vs 2C3");
    compare("trees up to 6", &trees, &c6, &two_c3)?;
    compare("cycles up to 8", &cycles, &c6, &two_c3)?;

    let srg = paulus_from_str(
        PAULUS_FIXTURE,
        Path::new("paulus25.txt"),
        &PaulusConfig { copies_per_class: 1 },
        0,
    )?;
    let (g, h) = (&srg.graphs()[0], &srg.graphs()[1]);
    println!("two non-isomorphic SRG(25, 12, 5, 6)");
    compare("trees up to 6", &trees, g, h)?;
    compare("cycles up to 8", &cycles, g, h)?;
    compare("K4", &[Pattern::custom(Graph::complete(4))?], g, h)?;
    Ok(())
}
