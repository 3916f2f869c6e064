#![allow(dead_code)]

use std::collections::BTreeSet;

use homcount::graph::{Graph, WeightedGraph};
use homcount::hom::PhiFunction;
use homcount::pattern::{canonical_graph_code, Pattern};
use rand::Rng;

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random labelled tree: vertex i attaches to a uniform earlier vertex,
/// then labels are shuffled.
pub fn random_tree<R: Rng>(k: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<usize> = (0..k).collect();
    for i in (1..k).rev() {
        labels.swap(i, rng.gen_range(0..=i));
    }
    let edges: Vec<_> = (1..k).map(|i| (labels[i], labels[rng.gen_range(0..i)])).collect();
    Graph::new(k, &edges).unwrap()
}

/// One representative per isomorphism class of graphs on exactly `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if seen.insert(canonical_graph_code(&g)) {
            out.push(g);
        }
    }
    out
}

/// `tr(A^k)` by dense matrix multiplication, independent of the library's
/// walk counter.
pub fn trace_power(g: &Graph, k: usize) -> u128 {
    let n = g.num_vertices();
    let a: Vec<Vec<u128>> = (0..n)
        .map(|u| (0..n).map(|v| u128::from(g.has_edge(u, v))).collect())
        .collect();
    let mut p = a.clone();
    for _ in 1..k {
        let mut next = vec![vec![0u128; n]; n];
        for i in 0..n {
            for l in 0..n {
                if p[i][l] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += p[i][l] * a[l][j];
                }
            }
        }
        p = next;
    }
    (0..n).map(|i| p[i][i]).sum()
}

pub fn relative_eq(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// Random graph with planted twins: some vertices copy the neighbourhood of
/// an earlier vertex. Integer weights (some zero) keep f64 sums exact.
pub fn graph_with_twins<R: Rng>(rng: &mut R) -> WeightedGraph {
    let base = random_graph(rng.gen_range(2..=5), 0.5, rng);
    let mut edges = base.edge_list();
    let mut n = base.num_vertices();
    for _ in 0..rng.gen_range(1..=3) {
        let original = rng.gen_range(0..n);
        let copy = n;
        n += 1;
        let neighbours: Vec<usize> = edges
            .iter()
            .filter_map(|&(a, b)| match (a == original, b == original) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect();
        edges.extend(neighbours.into_iter().map(|v| (copy, v)));
    }
    let g = Graph::new(n, &edges).unwrap();
    let weights = (0..n).map(|_| f64::from(rng.gen_range(0..4))).collect();
    WeightedGraph::new(g, weights).unwrap()
}

pub fn random_phi<R: Rng>(dim: usize, rng: &mut R) -> PhiFunction {
    match rng.gen_range(0..3) {
        0 => PhiFunction::ConstantOne,
        1 => PhiFunction::coordinate(rng.gen_range(0..dim)),
        _ => PhiFunction::Affine {
            weights: (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect(),
            bias: rng.gen_range(0.0..1.0),
        },
    }
}

pub fn random_pattern<R: Rng>(rng: &mut R) -> Pattern {
    match rng.gen_range(0..3) {
        0 => Pattern::tree(random_tree(rng.gen_range(1..=6), rng)).unwrap(),
        1 => Pattern::cycle(rng.gen_range(2..=7)).unwrap(),
        _ => Pattern::custom(random_graph(rng.gen_range(2..=4), 0.7, rng)).unwrap(),
    }
}
