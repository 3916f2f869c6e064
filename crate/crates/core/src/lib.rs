//! Graph homomorphism numbers and the graph embeddings built from them.
//!
//! The crate counts homomorphisms `hom(F, G)` from small pattern graphs `F`
//! into target graphs `G`, optionally weighting every map by per-vertex
//! encodings of the target's features, and stacks those counts into
//! isomorphism-invariant feature vectors for graph classification.
//!
//! * [`graph`]: simple graphs, featured and weighted graphs, permutations,
//!   twin reduction.
//! * [`pattern`]: tree/cycle/star/path catalogs, canonical codes, exact
//!   treewidth and nice tree decompositions.
//! * [`hom`]: brute-force, tree, closed-walk and tree-decomposition counters.
//! * [`dataset`]: TU-format datasets and the synthetic generators.
//! * [`embed`]: embedding matrices and standardisation.
//! * [`eval`]: stratified folds, a softmax classifier, cross-validation and
//!   runtime measurement.
//! * [`cli`]: the `homcount` command-line front end.
//!
//! ```
//! use homcount::graph::Graph;
//! use homcount::hom::{hom, VertexWeights};
//! use homcount::pattern::Pattern;
//!
//! let k3 = Graph::complete(3);
//! let edge = Pattern::path(2).unwrap();
//! assert_eq!(hom(&edge, &k3, &VertexWeights::Unit).unwrap().exact(), Some(6));
//! ```

pub mod cli;
pub mod dataset;
pub mod embed;
pub mod error;
pub mod eval;
pub mod graph;
pub mod hom;
pub mod pattern;

pub use error::{Error, Result};
