//! Simple undirected graphs, vertex-featured graphs and the structural
//! utilities shared by the rest of the crate.
//!
//! All values are immutable once built; transformations return new values.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..num_vertices`.
///
/// Neighbour lists are sorted and free of duplicates, the adjacency relation
/// is symmetric and there are no self-loops. Lists are stored back to back
/// (`neighbors(v) = targets[offsets[v]..offsets[v + 1]]`) so scans over all
/// vertices stay cache friendly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Parallel edges and reversed
    /// duplicates collapse into one edge.
    pub fn new(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); num_vertices];
        for &(u, v) in edges {
            for index in [u, v] {
                if index >= num_vertices {
                    return Err(Error::IndexOutOfRange { index, num_vertices });
                }
            }
            if u == v {
                return Err(Error::NotSimple(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Sorts and deduplicates neighbour lists. Callers guarantee symmetry and
    /// the absence of self-loops.
    pub(crate) fn from_raw_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(adjacency.len() + 1);
        offsets.push(0);
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            offsets.push(offsets.last().unwrap() + list.len());
        }
        Graph {
            offsets,
            targets: adjacency.concat(),
        }
    }

    pub fn empty(num_vertices: usize) -> Self {
        Graph {
            offsets: vec![0; num_vertices + 1],
            targets: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Self::from_raw_adjacency(adjacency)
    }

    /// Cycle `0-1-…-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    /// Star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.num_vertices() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_vertices())
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Sorted degree sequence (ascending).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.num_vertices()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }

    /// The graph `G^σ`: edge `(u, v)` becomes `(σ(u), σ(v))`.
    pub fn permute(&self, sigma: &VertexPermutation) -> Result<Self> {
        check_len(sigma.len(), self.num_vertices())?;
        let mut adjacency = vec![Vec::new(); self.num_vertices()];
        for u in 0..self.num_vertices() {
            adjacency[sigma.apply(u)] = self.neighbors(u).iter().map(|&v| sigma.apply(v)).collect();
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Two-colouring if the graph has no odd cycle, `None` otherwise.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.num_vertices();
        let mut color: Vec<Option<u8>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.num_vertices() >= 1 && self.num_edges() + 1 == self.num_vertices() && self.is_connected()
    }

    /// Vertices of `other` are shifted past the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.num_vertices();
        let base = self.targets.len();
        let mut offsets = self.offsets.clone();
        offsets.extend(other.offsets[1..].iter().map(|&o| o + base));
        let mut targets = self.targets.clone();
        targets.extend(other.targets.iter().map(|&v| v + shift));
        Graph { offsets, targets }
    }

    /// Subgraph induced by `keep` (in the given order), relabelled `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter_map(|&w| (position[w] != usize::MAX).then_some(position[w]))
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adjacency)
    }
}

fn check_len(actual: usize, expected: usize) -> Result<()> {
    if actual != expected {
        return Err(Error::Dimension { expected, actual });
    }
    Ok(())
}

/// A bijection on `{0, …, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutation(Vec<usize>);

impl VertexPermutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &image in &mapping {
            if image >= n || seen[image] {
                return Err(Error::Domain(format!("{mapping:?} is not a permutation")));
            }
            seen[image] = true;
        }
        Ok(VertexPermutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation((0..n).collect())
    }

    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut mapping: Vec<usize> = (0..n).collect();
        mapping.shuffle(rng);
        VertexPermutation(mapping)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (u, &image) in self.0.iter().enumerate() {
            inv[image] = u;
        }
        VertexPermutation(inv)
    }
}

/// A graph with a feature vector in `[0, 1]^p` on every vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct FeaturedGraph {
    graph: Graph,
    features: Vec<Vec<f64>>,
    dim: usize,
}

impl FeaturedGraph {
    pub fn new(graph: Graph, features: Vec<Vec<f64>>) -> Result<Self> {
        check_len(features.len(), graph.num_vertices())?;
        let dim = features.first().map_or(0, Vec::len);
        for (vertex, row) in features.iter().enumerate() {
            check_len(row.len(), dim)?;
            if let Some(&value) = row.iter().find(|x| !(0.0..=1.0).contains(*x)) {
                return Err(Error::FeatureRange { vertex, value });
            }
        }
        Ok(FeaturedGraph { graph, features, dim })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn features(&self) -> &[Vec<f64>] {
        &self.features
    }

    pub fn feature_dim(&self) -> usize {
        self.dim
    }

    /// Relocates feature rows alongside the vertices: `x^σ(σ(u)) = x(u)`.
    pub fn permute(&self, sigma: &VertexPermutation) -> Result<Self> {
        let graph = self.graph.permute(sigma)?;
        let mut features = vec![Vec::new(); self.features.len()];
        for (u, row) in self.features.iter().enumerate() {
            features[sigma.apply(u)] = row.clone();
        }
        Ok(FeaturedGraph {
            graph,
            features,
            dim: self.dim,
        })
    }

    /// Scalar view of a one-dimensional feature map.
    pub fn to_weighted(&self) -> Result<WeightedGraph> {
        if self.dim != 1 {
            return Err(Error::Unsupported(format!(
                "scalar weights need feature dimension 1, got {}",
                self.dim
            )));
        }
        WeightedGraph::new(self.graph.clone(), self.features.iter().map(|r| r[0]).collect())
    }
}

/// A graph with a non-negative real weight on every vertex.
///
/// Unlike [`FeaturedGraph`], weights are not bounded above: contracting twins
/// adds weights together.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<f64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<f64>) -> Result<Self> {
        check_len(weights.len(), graph.num_vertices())?;
        if let Some((vertex, &value)) = weights.iter().enumerate().find(|(_, w)| !(w.is_finite() && **w >= 0.0)) {
            return Err(Error::Domain(format!(
                "vertex {vertex} has weight {value}; weights must be finite and non-negative"
            )));
        }
        Ok(WeightedGraph { graph, weights })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn permute(&self, sigma: &VertexPermutation) -> Result<Self> {
        let graph = self.graph.permute(sigma)?;
        let mut weights = vec![0.0; self.weights.len()];
        for (u, &w) in self.weights.iter().enumerate() {
            weights[sigma.apply(u)] = w;
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Removes zero-weight vertices, then repeatedly contracts twins (equal
    /// open neighbourhoods) into the smallest-indexed member of each twin
    /// class, summing their weights, until no twins remain.
    ///
    /// Surviving vertices keep their relative order.
    pub fn twin_reduce(&self) -> WeightedGraph {
        let keep: Vec<usize> = (0..self.graph.num_vertices())
            .filter(|&v| self.weights[v] > 0.0)
            .collect();
        let mut graph = self.graph.induced(&keep);
        let mut weights: Vec<f64> = keep.iter().map(|&v| self.weights[v]).collect();

        loop {
            let mut classes: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
            for v in 0..graph.num_vertices() {
                classes.entry(graph.neighbors(v)).or_default().push(v);
            }
            let mut absorbed = vec![false; graph.num_vertices()];
            let mut merged_weights = weights.clone();
            let mut changed = false;
            for members in classes.values().filter(|m| m.len() > 1) {
                let head = members[0];
                for &other in &members[1..] {
                    merged_weights[head] += weights[other];
                    absorbed[other] = true;
                }
                changed = true;
            }
            if !changed {
                break;
            }
            let keep: Vec<usize> = (0..graph.num_vertices()).filter(|&v| !absorbed[v]).collect();
            weights = keep.iter().map(|&v| merged_weights[v]).collect();
            graph = graph.induced(&keep);
        }
        WeightedGraph { graph, weights }
    }
}
