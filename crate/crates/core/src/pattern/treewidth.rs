//! Exact treewidth by dynamic programming over vertex subsets.
//!
//! `TW(S)` is the best width reachable when the vertices of `S` are
//! eliminated first. With `Q(S, v)` the set of vertices outside `S ∪ {v}`
//! reachable from `v` through `S`:
//!
//! ```text
//! TW(∅) = -∞,   TW(S) = min_{v ∈ S} max(TW(S \ {v}), |Q(S \ {v}, v)|)
//! ```

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_TREEWIDTH_VERTICES: usize = 20;

/// Treewidth together with an elimination order achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Treewidth {
    pub width: usize,
    pub elimination_order: Vec<usize>,
}

pub fn treewidth_exact(g: &Graph) -> Result<Treewidth> {
    let n = g.num_vertices();
    if n > MAX_TREEWIDTH_VERTICES {
        return Err(Error::TooLarge(format!(
            "exact treewidth supports at most {MAX_TREEWIDTH_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Treewidth {
            width: 0,
            elimination_order: Vec::new(),
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();

    let full = (1u32 << n) - 1;
    // best[S] stores TW(S) + 1 so that 0 encodes the empty set's -∞.
    let mut best = vec![u8::MAX; 1 << n];
    let mut choice = vec![0u8; 1 << n];
    best[0] = 0;
    for set in 1..=full {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prior = set & !(1 << v);
            let q = reach_outside(&adj, prior, v).count_ones() as u8;
            let candidate = best[prior as usize].max(q + 1);
            if candidate < best[set as usize] {
                best[set as usize] = candidate;
                choice[set as usize] = v as u8;
            }
        }
    }

    let mut order = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let v = choice[set as usize];
        order.push(v as usize);
        set &= !(1 << v);
    }
    order.reverse();
    Ok(Treewidth {
        width: best[full as usize] as usize - 1,
        elimination_order: order,
    })
}

/// Vertices outside `inside ∪ {v}` reachable from `v` via paths whose
/// interior lies in `inside`.
fn reach_outside(adj: &[u32], inside: u32, v: usize) -> u32 {
    let mut visited = 1u32 << v;
    let mut frontier = 1u32 << v;
    let mut found = 0u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        next &= !visited;
        visited |= next;
        found |= next & !inside;
        frontier = next & inside;
    }
    found
}

/// Width of the decomposition induced by eliminating vertices in `order`:
/// the largest number of later neighbours in the fill-in graph.
pub fn elimination_width(g: &Graph, order: &[usize]) -> Result<usize> {
    let n = g.num_vertices();
    validate_order(n, order)?;
    Ok(elimination_bags(g, order)
        .iter()
        .map(|later| later.len())
        .max()
        .unwrap_or(0))
}

pub(crate) fn validate_order(n: usize, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::Domain(format!(
            "elimination order has {} entries for {n} vertices",
            order.len()
        )));
    }
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::Domain(format!("{order:?} is not an ordering of 0..{n}")));
        }
        seen[v] = true;
    }
    Ok(())
}

/// For each position `i` of `order`, the neighbours of `order[i]` that are
/// eliminated later, in the fill-in graph.
pub(crate) fn elimination_bags(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let n = g.num_vertices();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut fill: Vec<std::collections::BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut later_sets = Vec::with_capacity(n);
    for &v in order {
        let later: Vec<usize> = fill[v].iter().copied().filter(|&w| position[w] > position[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                fill[a].insert(b);
                fill[b].insert(a);
            }
        }
        later_sets.push(later);
    }
    later_sets
}
