//! Direct enumeration of vertex maps. Used as the reference oracle.

use super::count::Count;
use crate::graph::Graph;

/// Upper bound on `|V(G)|^|V(F)|` accepted by the brute-force counter.
pub const BRUTE_FORCE_LIMIT: u128 = 100_000_000;

/// Sums `Π_u w(π(u))` over all edge-preserving maps `π: V(F) → V(G)`,
/// assigning pattern vertices in index order and abandoning a partial map
/// as soon as an edge to an earlier vertex is violated.
pub(crate) fn brute_force<T: Count>(pattern: &Graph, target: &Graph, weights: Option<&[T]>) -> Option<T> {
    let k = pattern.num_vertices();
    let n = target.num_vertices();
    if k == 0 {
        return Some(T::one());
    }
    if n == 0 {
        return Some(T::zero());
    }
    let earlier: Vec<Vec<usize>> = (0..k)
        .map(|u| pattern.neighbors(u).iter().copied().filter(|&w| w < u).collect())
        .collect();
    let weight = |v: usize| weights.map_or(T::one(), |w| w[v]);

    let mut image = vec![0usize; k];
    // partial[d] is the weight product of the first d assignments.
    let mut partial = vec![T::one(); k + 1];
    let mut total = T::zero();
    let mut depth = 0;
    image[0] = 0;
    loop {
        let candidate = image[depth];
        if candidate == n {
            if depth == 0 {
                return Some(total);
            }
            depth -= 1;
            image[depth] += 1;
            continue;
        }
        let fits = earlier[depth].iter().all(|&w| target.has_edge(candidate, image[w]));
        if fits {
            let product = partial[depth].mul(weight(candidate))?;
            if depth + 1 == k {
                total = total.add(product)?;
                image[depth] += 1;
            } else {
                partial[depth + 1] = product;
                depth += 1;
                image[depth] = 0;
            }
        } else {
            image[depth] += 1;
        }
    }
}
