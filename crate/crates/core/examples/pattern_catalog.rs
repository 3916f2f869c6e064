//! Prints the tree catalog with canonical codes and treewidths, and the
//! exact treewidth of a few denser patterns.
//!
//! cargo run --example pattern_catalog -- [max_tree_size]

use homcount::graph::Graph;
use homcount::pattern::{enumerate_cycles, enumerate_trees, treewidth_exact};

fn main() -> homcount::Result<()> {
    let max = std::env::args()
        .nth(1)
        .map_or(Ok(6), |s| s.parse())
        .expect("size must be an integer");
    let trees = enumerate_trees(max)?;
    for size in 2..=max {
        let same: Vec<_> = trees.iter().filter(|t| t.size() == size).collect();
        println!("{size:>2} vertices: {} trees", same.len());
        if size <= 6 {
            for (i, t) in same.iter().enumerate() {
                println!("     {:<10} {}", t.label(Some(i)), t.canonical_code());
            }
        }
    }
    println!("cycles up to 8: {}", enumerate_cycles(8)?.len());

    for (name, g) in [
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("C7", Graph::cycle(7)?),
        ("3x3 grid", grid(3)?),
    ] {
        println!("treewidth {name}: {}", treewidth_exact(&g)?.width);
    }
    Ok(())
}

fn grid(k: usize) -> homcount::Result<Graph> {
    let mut edges = Vec::new();
    for r in 0..k {
        for c in 0..k {
            let v = r * k + c;
            if c + 1 < k {
                edges.push((v, v + 1));
            }
            if r + 1 < k {
                edges.push((v, v + k));
            }
        }
    }
    Graph::new(k * k, &edges)
}
