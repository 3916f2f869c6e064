//! Linear-time homomorphism counting from tree patterns.
//!
//! Rooting the pattern at vertex 0, the table of a pattern vertex `u` holds,
//! for every target vertex `i`, the weighted number of homomorphisms of the
//! subtree under `u` that send `u` to `i`:
//!
//! ```text
//! table_u[i] = w(i) · Π_{children c} Σ_{j ∈ N_G(i)} table_c[j]
//! ```
//!
//! The answer is `Σ_i table_root[i]`. The recursion runs on an explicit
//! post-order so path-shaped patterns never hit recursion limits.

use super::count::{checked_sum, Count};
use crate::graph::Graph;

/// Post-order of `tree` rooted at 0 together with each vertex's parent.
pub(crate) fn rooted_post_order(tree: &Graph) -> (Vec<usize>, Vec<usize>) {
    let k = tree.num_vertices();
    let mut parent = vec![usize::MAX; k];
    let mut order = Vec::with_capacity(k);
    if k == 0 {
        return (order, parent);
    }
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in tree.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    order.reverse();
    (order, parent)
}

pub(crate) fn tree_dp<T: Count>(pattern: &Graph, target: &Graph, weights: Option<&[T]>) -> Option<T> {
    let n = target.num_vertices();
    if pattern.num_vertices() == 0 {
        return Some(T::one());
    }
    let weight = |i: usize| weights.map_or(T::one(), |w| w[i]);
    let (order, parent) = rooted_post_order(pattern);
    let is_leaf = |c: usize| pattern.degree(c) == 1 && c != 0;
    // Every leaf child contributes the same factor Σ_{j ∈ N(i)} w(j).
    let leaf_sums: Option<Vec<T>> = if order.iter().any(|&c| is_leaf(c)) {
        Some(
            (0..n)
                .map(|i| checked_sum(target.neighbors(i).iter().map(|&j| weight(j))))
                .collect::<Option<_>>()?,
        )
    } else {
        None
    };
    let mut tables: Vec<Option<Vec<T>>> = vec![None; pattern.num_vertices()];
    for &u in &order {
        if is_leaf(u) {
            continue;
        }
        let mut table: Vec<T> = (0..n).map(weight).collect();
        for &c in pattern.neighbors(u) {
            if parent[c] != u || c == u {
                continue;
            }
            if is_leaf(c) {
                let sums = leaf_sums.as_ref().expect("computed when leaves exist");
                for (slot, &s) in table.iter_mut().zip(sums) {
                    *slot = slot.mul(s)?;
                }
                continue;
            }
            let child = tables[c].take().expect("children precede parents in post-order");
            for (i, slot) in table.iter_mut().enumerate() {
                if *slot == T::zero() {
                    continue;
                }
                let aux = checked_sum(target.neighbors(i).iter().map(|&j| child[j]))?;
                *slot = slot.mul(aux)?;
            }
        }
        tables[u] = Some(table);
    }
    checked_sum(tables[0].take().expect("the root is never a skipped leaf"))
}

/// Exact tree count: `u64` tables first (half the memory traffic), `u128`
/// when those overflow. `None` when even `u128` overflows.
pub(crate) fn tree_dp_exact(pattern: &Graph, target: &Graph) -> Option<u128> {
    tree_dp::<u64>(pattern, target, None)
        .map(u128::from)
        .or_else(|| tree_dp::<u128>(pattern, target, None))
}
