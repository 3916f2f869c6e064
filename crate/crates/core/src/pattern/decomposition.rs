//! Nice tree decompositions built from elimination orders.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::treewidth::{elimination_bags, treewidth_exact, validate_order};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// No children, empty bag.
    Leaf,
    /// One child; the bag gains this vertex.
    Introduce(usize),
    /// One child; the bag loses this vertex.
    Forget(usize),
    /// Two children with bags identical to this node's bag.
    Join,
}

/// A rooted nice tree decomposition. Children always have smaller indices
/// than their parent, so index order is a valid bottom-up schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    kinds: Vec<NodeKind>,
    children: Vec<Vec<usize>>,
    root: usize,
    width: usize,
}

struct Builder {
    bags: Vec<Vec<usize>>,
    kinds: Vec<NodeKind>,
    children: Vec<Vec<usize>>,
}

impl Builder {
    fn push(&mut self, bag: Vec<usize>, kind: NodeKind, children: Vec<usize>) -> usize {
        self.bags.push(bag);
        self.kinds.push(kind);
        self.children.push(children);
        self.bags.len() - 1
    }

    fn leaf(&mut self) -> usize {
        self.push(Vec::new(), NodeKind::Leaf, Vec::new())
    }

    /// Forgets and then introduces single vertices until the bag equals `target`.
    fn morph(&mut self, mut node: usize, target: &[usize]) -> usize {
        let current = self.bags[node].clone();
        for &v in current.iter().filter(|v| !target.contains(v)) {
            let bag: Vec<usize> = self.bags[node].iter().copied().filter(|&w| w != v).collect();
            node = self.push(bag, NodeKind::Forget(v), vec![node]);
        }
        for &v in target.iter().filter(|v| !current.contains(v)) {
            let mut bag = self.bags[node].clone();
            bag.push(v);
            bag.sort_unstable();
            node = self.push(bag, NodeKind::Introduce(v), vec![node]);
        }
        node
    }
}

/// Builds a nice decomposition from an elimination order of `g`. Its width
/// equals the width of the order.
pub fn build_nice_decomposition(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.num_vertices();
    validate_order(n, order)?;
    let mut builder = Builder {
        bags: Vec::new(),
        kinds: Vec::new(),
        children: Vec::new(),
    };
    if n == 0 {
        let root = builder.leaf();
        return Ok(builder.finish(root));
    }

    let later = elimination_bags(g, order);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let raw_bags: Vec<Vec<usize>> = order
        .iter()
        .zip(&later)
        .map(|(&v, rest)| {
            let mut bag = rest.clone();
            bag.push(v);
            bag.sort_unstable();
            bag
        })
        .collect();
    // The parent of position i is the earliest-eliminated later neighbour,
    // or simply the next position when there is none.
    let mut raw_children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n.saturating_sub(1) {
        let parent = later[i].iter().map(|&w| position[w]).min().unwrap_or(i + 1);
        raw_children[parent].push(i);
    }

    // Parents always sit at later positions, so a forward sweep sees
    // every child before its parent.
    let mut nice_of = vec![usize::MAX; n];
    for i in 0..n {
        let bag = &raw_bags[i];
        let mut branches: Vec<usize> = raw_children[i]
            .iter()
            .map(|&c| builder.morph(nice_of[c], bag))
            .collect();
        if branches.is_empty() {
            let leaf = builder.leaf();
            branches.push(builder.morph(leaf, bag));
        }
        let mut node = branches[0];
        for &other in &branches[1..] {
            node = builder.push(bag.clone(), NodeKind::Join, vec![node, other]);
        }
        nice_of[i] = node;
    }
    let root = builder.morph(nice_of[n - 1], &[]);
    Ok(builder.finish(root))
}

impl Builder {
    fn finish(self, root: usize) -> TreeDecomposition {
        let width = self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1);
        TreeDecomposition {
            bags: self.bags,
            kinds: self.kinds,
            children: self.children,
            root,
            width,
        }
    }
}

impl TreeDecomposition {
    /// Optimal-width nice decomposition via exact treewidth.
    pub fn optimal(g: &Graph) -> Result<Self> {
        let tw = treewidth_exact(g)?;
        build_nice_decomposition(g, &tw.elimination_order)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, node: usize) -> &[usize] {
        &self.bags[node]
    }

    pub fn kind(&self, node: usize) -> NodeKind {
        self.kinds[node]
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    /// The decomposition tree itself as a graph on node indices.
    pub fn tree(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .children
            .iter()
            .enumerate()
            .flat_map(|(p, cs)| cs.iter().map(move |&c| (p, c)))
            .collect();
        Graph::new(self.num_nodes(), &edges).expect("decomposition edges are in range")
    }

    /// Checks the three decomposition conditions (cover, edge containment,
    /// connectivity) together with the nice-form node rules and the
    /// child-before-parent index order.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::Domain(format!("invalid tree decomposition: {msg}")));
        let m = self.num_nodes();
        if self.root >= m {
            return fail(format!("root {} out of range", self.root));
        }
        let mut parent = vec![usize::MAX; m];
        for (node, cs) in self.children.iter().enumerate() {
            for &c in cs {
                if c >= node {
                    return fail(format!("child {c} does not precede parent {node}"));
                }
                if parent[c] != usize::MAX {
                    return fail(format!("node {c} has two parents"));
                }
                parent[c] = node;
            }
        }
        for node in 0..m {
            if node != self.root && parent[node] == usize::MAX {
                return fail(format!("node {node} is disconnected from the root"));
            }
        }
        if parent[self.root] != usize::MAX {
            return fail("root has a parent".into());
        }

        for node in 0..m {
            let bag = &self.bags[node];
            if bag.windows(2).any(|w| w[0] >= w[1]) || bag.iter().any(|&v| v >= g.num_vertices()) {
                return fail(format!("bag {node} is not a sorted vertex set"));
            }
            let cs = &self.children[node];
            let ok = match self.kinds[node] {
                NodeKind::Leaf => cs.is_empty() && bag.is_empty(),
                NodeKind::Introduce(v) => {
                    cs.len() == 1 && {
                        let child = &self.bags[cs[0]];
                        !child.contains(&v)
                            && bag.len() == child.len() + 1
                            && bag.contains(&v)
                            && child.iter().all(|w| bag.contains(w))
                    }
                }
                NodeKind::Forget(v) => {
                    cs.len() == 1 && {
                        let child = &self.bags[cs[0]];
                        child.contains(&v)
                            && bag.len() + 1 == child.len()
                            && !bag.contains(&v)
                            && bag.iter().all(|w| child.contains(w))
                    }
                }
                NodeKind::Join => cs.len() == 2 && self.bags[cs[0]] == *bag && self.bags[cs[1]] == *bag,
            };
            if !ok {
                return fail(format!("node {node} violates the {:?} rule", self.kinds[node]));
            }
        }

        for v in 0..g.num_vertices() {
            // Connected iff exactly one node holding v lacks a parent holding v.
            let tops = (0..m)
                .filter(|&t| self.bags[t].contains(&v))
                .filter(|&t| parent[t] == usize::MAX || !self.bags[parent[t]].contains(&v))
                .count();
            match tops {
                0 => return fail(format!("vertex {v} is in no bag")),
                1 => {}
                _ => return fail(format!("bags holding vertex {v} are not connected")),
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return fail(format!("edge ({u}, {v}) is in no bag"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_has_small_bags() {
        let p3 = Graph::path(3);
        let td = TreeDecomposition::optimal(&p3).unwrap();
        td.validate(&p3).unwrap();
        assert_eq!(td.width(), 1);
        assert!((0..td.num_nodes()).all(|t| td.bag(t).len() <= 2));
    }

    #[test]
    fn c4_width_two() {
        let c4 = Graph::cycle(4).unwrap();
        let td = TreeDecomposition::optimal(&c4).unwrap();
        td.validate(&c4).unwrap();
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn triangle_single_bag() {
        let k3 = Graph::complete(3);
        let td = build_nice_decomposition(&k3, &[0, 1, 2]).unwrap();
        td.validate(&k3).unwrap();
        assert_eq!(td.width(), 2);
        assert!((0..td.num_nodes()).any(|t| td.bag(t) == [0, 1, 2]));
        assert!(td.tree().is_tree());
    }

    #[test]
    fn disconnected_and_empty_patterns() {
        let g = Graph::complete(3).disjoint_union(&Graph::path(2));
        let td = TreeDecomposition::optimal(&g).unwrap();
        td.validate(&g).unwrap();
        let empty = Graph::empty(0);
        let td = TreeDecomposition::optimal(&empty).unwrap();
        td.validate(&empty).unwrap();
        assert_eq!(td.num_nodes(), 1);
    }

    #[test]
    fn any_order_gives_a_valid_decomposition() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        for order in [[0, 1, 2, 3, 4], [4, 3, 2, 1, 0], [2, 0, 4, 1, 3]] {
            let td = build_nice_decomposition(&g, &order).unwrap();
            td.validate(&g).unwrap();
            assert_eq!(
                td.width(),
                crate::pattern::treewidth::elimination_width(&g, &order).unwrap()
            );
        }
    }

    #[test]
    fn validator_catches_missing_edge() {
        let p3 = Graph::path(3);
        let td = TreeDecomposition::optimal(&p3).unwrap();
        let k3 = Graph::complete(3);
        assert!(td.validate(&k3).is_err());
    }

    #[test]
    fn invalid_order() {
        assert!(build_nice_decomposition(&Graph::path(3), &[0, 1, 1]).is_err());
    }
}
