//! Canonical codes for small graphs.
//!
//! Trees use the AHU encoding rooted at the centre. Other graphs use a small
//! individualisation-refinement search returning the lexicographically
//! smallest adjacency string over all leaves of the search tree.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// AHU code of a free tree, rooted at its centre (the smaller of the two
/// rootings when the tree is bicentral).
pub fn canonical_tree_code(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::Domain(format!(
            "canonical_tree_code needs a tree, got {} vertices and {} edges",
            g.num_vertices(),
            g.num_edges()
        )));
    }
    Ok(tree_centers(g)
        .into_iter()
        .map(|root| rooted_code(g, root))
        .min()
        .expect("a tree has at least one centre"))
}

/// One or two centres found by repeatedly stripping leaves.
pub(crate) fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.num_vertices();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Bracket encoding `(` children-sorted `)`, built bottom-up without recursion.
fn rooted_code(g: &Graph, root: usize) -> String {
    let n = g.num_vertices();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut code = vec![String::new(); n];
    for &u in order.iter().rev() {
        let mut children = std::mem::take(&mut child_codes[u]);
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        s.push('(');
        for c in &children {
            s.push_str(c);
        }
        s.push(')');
        if u != root {
            child_codes[parent[u]].push(s.clone());
        }
        code[u] = s;
    }
    std::mem::take(&mut code[root])
}

/// Canonical adjacency string of an arbitrary small graph.
///
/// The result has the form `n:bits` where `bits` is the upper triangle of
/// the adjacency matrix under the canonical labelling, row by row.
pub fn canonical_graph_code(g: &Graph) -> String {
    let n = g.num_vertices();
    let colors = refine(g, vec![0; n]);
    let mut best: Option<Vec<u8>> = None;
    search(g, colors, &mut best);
    let bits: String = best
        .unwrap_or_default()
        .into_iter()
        .map(|b| if b == 1 { '1' } else { '0' })
        .collect();
    format!("{n}:{bits}")
}

/// Colour refinement to a stable partition. New colours are assigned by the
/// sorted order of (old colour, sorted neighbour colours), so the result is
/// invariant under relabelling.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.num_vertices();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures.iter().map(|s| distinct.binary_search(&s).unwrap()).collect();
        let before = colors.iter().copied().max().map_or(0, |m| m + 1);
        let after = distinct.len();
        colors = next;
        if after == before {
            return colors;
        }
    }
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
    let n = g.num_vertices();
    let num_colors = colors.iter().copied().max().map_or(0, |m| m + 1);
    if num_colors == n {
        let mut label = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            label[c] = v;
        }
        let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                bits.push(u8::from(g.has_edge(label[i], label[j])));
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            *best = Some(bits);
        }
        return;
    }
    // First smallest non-singleton cell, by colour index.
    let mut sizes = vec![0usize; num_colors];
    for &c in &colors {
        sizes[c] += 1;
    }
    let target = (0..num_colors).find(|&c| sizes[c] > 1).unwrap();
    for v in (0..n).filter(|&v| colors[v] == target) {
        // Individualise v: it gets a colour just below its cell-mates.
        let split: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + usize::from(!(c == target && w == v)))
            .collect();
        search(g, refine(g, compact(split)), best);
    }
}

fn compact(colors: Vec<usize>) -> Vec<usize> {
    let mut distinct = colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    colors
        .into_iter()
        .map(|c| distinct.binary_search(&c).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexPermutation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn p3_and_s2_agree() {
        let p3 = Graph::path(3);
        let s2 = Graph::star(2);
        assert_eq!(canonical_tree_code(&p3).unwrap(), canonical_tree_code(&s2).unwrap());
    }

    #[test]
    fn p4_and_s3_differ() {
        assert_ne!(
            canonical_tree_code(&Graph::path(4)).unwrap(),
            canonical_tree_code(&Graph::star(3)).unwrap()
        );
    }

    #[test]
    fn non_tree_rejected() {
        assert!(canonical_tree_code(&Graph::cycle(4).unwrap()).is_err());
        assert!(canonical_tree_code(&Graph::empty(2)).is_err());
    }

    #[test]
    fn bicentral_path_is_rooting_independent() {
        let p6 = Graph::path(6);
        let sigma = VertexPermutation::new(vec![3, 0, 5, 1, 4, 2]).unwrap();
        assert_eq!(
            canonical_tree_code(&p6).unwrap(),
            canonical_tree_code(&p6.permute(&sigma).unwrap()).unwrap()
        );
    }

    #[test]
    fn graph_code_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        let code = canonical_graph_code(&g);
        for _ in 0..20 {
            let sigma = VertexPermutation::random(7, &mut rng);
            assert_eq!(canonical_graph_code(&g.permute(&sigma).unwrap()), code);
        }
    }

    #[test]
    fn graph_code_separates_c6_from_two_triangles() {
        let c6 = Graph::cycle(6).unwrap();
        let two_c3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_ne!(canonical_graph_code(&c6), canonical_graph_code(&two_c3));
    }

    #[test]
    fn cycle_code_is_cheap_for_twelve_vertices() {
        let c12 = Graph::cycle(12).unwrap();
        assert_eq!(canonical_graph_code(&c12).len(), "12:".len() + 66);
    }
}
