//! Homomorphism counting over a nice tree decomposition of the pattern.
//!
//! Each node keeps a dense table indexed by assignments `bag → V(G)` (mixed
//! radix, first bag vertex least significant). Introduce nodes filter
//! assignments that break a pattern edge inside the bag, forget nodes sum
//! the forgotten vertex out multiplied by its target weight, and join nodes
//! multiply their children pointwise. Every pattern vertex is forgotten at
//! most once, and vertices still present at the root are summed out there,
//! so each vertex weight enters every term exactly once.

use super::count::Count;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{NodeKind, TreeDecomposition};

/// Largest table (in entries) the decomposition counter will allocate.
pub const MAX_TABLE_ENTRIES: u128 = 50_000_000;

pub(crate) fn check_table_size(td: &TreeDecomposition, n: usize) -> Result<()> {
    let widest = (0..td.num_nodes()).map(|t| td.bag(t).len()).max().unwrap_or(0);
    let entries = (n as u128).checked_pow(widest as u32).unwrap_or(u128::MAX);
    if entries > MAX_TABLE_ENTRIES {
        return Err(Error::TooLarge(format!(
            "decomposition tables would need {n}^{widest} entries"
        )));
    }
    Ok(())
}

pub(crate) fn treedec_dp<T: Count>(
    pattern: &Graph,
    td: &TreeDecomposition,
    target: &Graph,
    weights: Option<&[T]>,
) -> Option<T> {
    let n = target.num_vertices();
    let weight = |v: usize| weights.map_or(T::one(), |w| w[v]);
    let size = |bag_len: usize| n.pow(bag_len as u32);
    let mut tables: Vec<Option<Vec<T>>> = vec![None; td.num_nodes()];

    for node in 0..td.num_nodes() {
        let bag = td.bag(node);
        let table = match td.kind(node) {
            NodeKind::Leaf => vec![T::one()],
            NodeKind::Introduce(v) => {
                let child_id = td.children(node)[0];
                let child = tables[child_id].take().unwrap();
                let pos = bag.iter().position(|&x| x == v).unwrap();
                let bag_neighbors: Vec<usize> = bag
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| pattern.has_edge(u, v))
                    .map(|(i, _)| i)
                    .collect();
                let low = n.pow(pos as u32);
                let mut table = vec![T::zero(); size(bag.len())];
                let mut digits = vec![0usize; bag.len()];
                for (index, slot) in table.iter_mut().enumerate() {
                    decode(index, n, &mut digits);
                    let image = digits[pos];
                    if bag_neighbors.iter().all(|&i| target.has_edge(image, digits[i])) {
                        // Drop digit `pos` to address the child table.
                        let child_index = index % low + (index / (low * n)) * low;
                        *slot = child[child_index];
                    }
                }
                table
            }
            NodeKind::Forget(v) => {
                let child_id = td.children(node)[0];
                let child = tables[child_id].take().unwrap();
                let pos = td.bag(child_id).iter().position(|&x| x == v).unwrap();
                let low = n.pow(pos as u32);
                let mut table = vec![T::zero(); size(bag.len())];
                for (index, slot) in table.iter_mut().enumerate() {
                    let base = index % low + (index / low) * low * n;
                    let mut acc = T::zero();
                    for x in 0..n {
                        let entry = child[base + x * low];
                        if entry != T::zero() {
                            acc = acc.add(entry.mul(weight(x))?)?;
                        }
                    }
                    *slot = acc;
                }
                table
            }
            NodeKind::Join => {
                let [a, b] = [td.children(node)[0], td.children(node)[1]];
                let left = tables[a].take().unwrap();
                let right = tables[b].take().unwrap();
                left.iter()
                    .zip(&right)
                    .map(|(&x, &y)| x.mul(y))
                    .collect::<Option<Vec<T>>>()?
            }
        };
        tables[node] = Some(table);
    }

    let root = td.root();
    let table = tables[root].take().unwrap();
    let bag = td.bag(root);
    let mut digits = vec![0usize; bag.len()];
    let mut total = T::zero();
    for (index, &entry) in table.iter().enumerate() {
        if entry == T::zero() {
            continue;
        }
        decode(index, n, &mut digits);
        let mut term = entry;
        for &d in &digits {
            term = term.mul(weight(d))?;
        }
        total = total.add(term)?;
    }
    Some(total)
}

fn decode(mut index: usize, n: usize, digits: &mut [usize]) {
    for d in digits.iter_mut() {
        *d = index % n;
        index /= n;
    }
}
