//! Cycle homomorphisms as weighted closed-walk counts, `tr((WA)^k)`.

use super::count::Count;
use crate::graph::Graph;

/// Closed-walk totals for every length in `2..=max_len`, weighted by
/// `Π w(v)` over the walk's vertices. Entry `i` belongs to length `i + 2`;
/// `None` marks an overflow, which also poisons every longer length.
pub(crate) fn closed_walks<T: Count>(target: &Graph, weights: Option<&[T]>, max_len: usize) -> Vec<Option<T>> {
    let n = target.num_vertices();
    let mut totals: Vec<Option<T>> = vec![Some(T::zero()); max_len.saturating_sub(1)];
    if totals.is_empty() {
        return totals;
    }
    let weight = |v: usize| weights.map_or(T::one(), |w| w[v]);
    let sum_over =
        |list: &[usize], values: &[T]| -> Option<T> { list.iter().try_fold(T::zero(), |acc, &u| acc.add(values[u])) };
    let mut current = vec![T::zero(); n];
    let mut next = vec![T::zero(); n];
    for start in 0..n {
        let ws = weight(start);
        if ws == T::zero() {
            continue;
        }
        current.iter_mut().for_each(|x| *x = T::zero());
        current[start] = ws;
        // current[v]: weighted walks with `edges` edges from start to v.
        let mut poisoned_from = usize::MAX;
        for edges in 1..max_len {
            let mut overflow = false;
            for v in 0..n {
                let wv = weight(v);
                next[v] = if wv == T::zero() {
                    T::zero()
                } else {
                    match sum_over(target.neighbors(v), &current).and_then(|s| s.mul(wv)) {
                        Some(x) => x,
                        None => {
                            overflow = true;
                            T::zero()
                        }
                    }
                };
            }
            std::mem::swap(&mut current, &mut next);
            if overflow {
                poisoned_from = poisoned_from.min(edges + 1);
            }
            // Returning to start closes a walk of length edges + 1.
            let len = edges + 1;
            let slot = &mut totals[len - 2];
            *slot = if len >= poisoned_from {
                None
            } else {
                match (sum_over(target.neighbors(start), &current), *slot) {
                    (Some(c), Some(t)) => t.add(c),
                    _ => None,
                }
            };
        }
    }
    // An overflow at one length makes every longer total unreliable.
    if let Some(first) = totals.iter().position(Option::is_none) {
        totals[first..].iter_mut().for_each(|t| *t = None);
    }
    totals
}
