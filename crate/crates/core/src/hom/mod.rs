//! Homomorphism numbers, densities and `(F, φ)`-convolutions.
//!
//! Four counters share one contract: a brute-force enumerator that serves
//! as the oracle, a linear-time tree recursion, closed-walk counting for
//! cycles and a dynamic program over nice tree decompositions. Unweighted
//! counts are exact `u128`; when a count overflows it is recomputed in
//! `f64` and flagged as promoted.

mod brute;
mod count;
mod cycle;
mod tree;
mod treedec;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use brute::BRUTE_FORCE_LIMIT;
pub use treedec::MAX_TABLE_ENTRIES;

use crate::error::{Error, Result};
use crate::graph::{FeaturedGraph, Graph, WeightedGraph};
use crate::pattern::{Family, Pattern, TreeDecomposition};

/// A homomorphism number: exact when every vertex weight is one, real
/// otherwise or after an overflow.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HomValue {
    Exact(u128),
    Real { value: f64, promoted: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Real,
}

impl HomValue {
    pub fn as_f64(&self) -> f64 {
        match *self {
            HomValue::Exact(v) => v as f64,
            HomValue::Real { value, .. } => value,
        }
    }

    pub fn exact(&self) -> Option<u128> {
        match *self {
            HomValue::Exact(v) => Some(v),
            HomValue::Real { .. } => None,
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            HomValue::Exact(_) => Mode::Exact,
            HomValue::Real { .. } => Mode::Real,
        }
    }

    /// True when an exact count overflowed 128 bits and fell back to `f64`.
    pub fn is_promoted(&self) -> bool {
        matches!(self, HomValue::Real { promoted: true, .. })
    }

    fn real(value: f64) -> Self {
        HomValue::Real { value, promoted: false }
    }
}

impl fmt::Display for HomValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomValue::Exact(v) => write!(f, "{v}"),
            HomValue::Real { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Per-vertex weights of the target.
#[derive(Clone, Debug, PartialEq)]
pub enum VertexWeights {
    /// Every weight is one: plain homomorphism counting.
    Unit,
    Real(Vec<f64>),
}

impl VertexWeights {
    fn check(&self, target: &Graph) -> Result<()> {
        if let VertexWeights::Real(w) = self {
            if w.len() != target.num_vertices() {
                return Err(Error::Dimension {
                    expected: target.num_vertices(),
                    actual: w.len(),
                });
            }
        }
        Ok(())
    }
}

impl From<&WeightedGraph> for VertexWeights {
    fn from(wg: &WeightedGraph) -> Self {
        VertexWeights::Real(wg.weights().to_vec())
    }
}

/// The encoding `φ: R^p → R` applied to vertex features before counting.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PhiFunction {
    ConstantOne,
    Coordinate { index: usize },
    Affine { weights: Vec<f64>, bias: f64 },
}

impl PhiFunction {
    pub fn coordinate(index: usize) -> Self {
        PhiFunction::Coordinate { index }
    }

    /// Stable short identifier used in column names.
    pub fn id(&self) -> String {
        match self {
            PhiFunction::ConstantOne => "one".to_string(),
            PhiFunction::Coordinate { index } => format!("x{index}"),
            PhiFunction::Affine { weights, bias } => {
                let w: Vec<String> = weights.iter().map(|x| format!("{x}")).collect();
                format!("affine[{};{bias}]", w.join(","))
            }
        }
    }

    /// Evaluates `φ` on one feature vector; the output is clamped to a
    /// finite value.
    pub fn apply(&self, x: &[f64]) -> Result<f64> {
        let raw = match self {
            PhiFunction::ConstantOne => 1.0,
            PhiFunction::Coordinate { index } => *x.get(*index).ok_or_else(|| {
                Error::Config(format!(
                    "coordinate encoding x{index} needs feature dimension > {index}, got {}",
                    x.len()
                ))
            })?,
            PhiFunction::Affine { weights, bias } => {
                if weights.len() != x.len() {
                    return Err(Error::Dimension {
                        expected: x.len(),
                        actual: weights.len(),
                    });
                }
                weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>() + bias
            }
        };
        Ok(if raw.is_nan() {
            0.0
        } else {
            raw.clamp(f64::MIN, f64::MAX)
        })
    }

    /// Vertex weights `φ(x(v))` of a featured graph.
    pub fn vertex_weights(&self, fg: &FeaturedGraph) -> Result<VertexWeights> {
        if *self == PhiFunction::ConstantOne {
            return Ok(VertexWeights::Unit);
        }
        if let PhiFunction::Coordinate { index } = self {
            if *index >= fg.feature_dim() {
                return Err(Error::Config(format!(
                    "coordinate encoding x{index} needs feature dimension > {index}, got {}",
                    fg.feature_dim()
                )));
            }
        }
        fg.features()
            .iter()
            .map(|row| self.apply(row))
            .collect::<Result<Vec<_>>>()
            .map(VertexWeights::Real)
    }
}

/// Which counter to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Brute,
    Tree,
    Cycle,
    TreeDecomposition,
}

/// Runs `f` exactly when weights are unit, falling back to `f64` on
/// overflow; real weights go straight to `f64`.
fn run<E, R>(weights: &VertexWeights, exact: E, real: R) -> Result<HomValue>
where
    E: FnOnce() -> Result<Option<u128>>,
    R: FnOnce(Option<&[f64]>) -> Result<Option<f64>>,
{
    match weights {
        VertexWeights::Unit => match exact()? {
            Some(v) => Ok(HomValue::Exact(v)),
            None => {
                let value = real(None)?.expect("f64 arithmetic does not overflow");
                Ok(HomValue::Real { value, promoted: true })
            }
        },
        VertexWeights::Real(w) => Ok(HomValue::real(
            real(Some(w))?.expect("f64 arithmetic does not overflow"),
        )),
    }
}

/// Reference counter: enumerates every map `V(F) → V(G)`.
pub fn hom_brute(pattern: &Graph, target: &Graph, weights: &VertexWeights) -> Result<HomValue> {
    weights.check(target)?;
    let work = (target.num_vertices() as u128)
        .checked_pow(pattern.num_vertices() as u32)
        .unwrap_or(u128::MAX);
    if work > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge(format!(
            "brute force over {}^{} maps exceeds the limit of {BRUTE_FORCE_LIMIT}",
            target.num_vertices(),
            pattern.num_vertices()
        )));
    }
    run(
        weights,
        || Ok(brute::brute_force::<u128>(pattern, target, None)),
        |w| Ok(brute::brute_force::<f64>(pattern, target, w)),
    )
}

/// Tree recursion; the pattern must be a tree.
pub fn hom_tree(pattern: &Graph, target: &Graph, weights: &VertexWeights) -> Result<HomValue> {
    weights.check(target)?;
    if !pattern.is_tree() {
        return Err(Error::Domain("tree counting needs a tree pattern".into()));
    }
    run(
        weights,
        || Ok(tree::tree_dp_exact(pattern, target)),
        |w| Ok(tree::tree_dp::<f64>(pattern, target, w)),
    )
}

/// `hom(C_k, G)` as the (weighted) trace of `A^k`; `k = 2` counts each edge twice.
pub fn hom_cycle(k: usize, target: &Graph, weights: &VertexWeights) -> Result<HomValue> {
    Ok(hom_cycles(k, target, weights)?.pop().expect("at least one length"))
}

/// `hom(C_j, G)` for every `j` in `2..=max_len` in one pass.
pub fn hom_cycles(max_len: usize, target: &Graph, weights: &VertexWeights) -> Result<Vec<HomValue>> {
    weights.check(target)?;
    if max_len < 2 {
        return Err(Error::Parameter(format!(
            "cycle length must be at least 2, got {max_len}"
        )));
    }
    match weights {
        VertexWeights::Unit => {
            let exact = cycle::closed_walks::<u128>(target, None, max_len);
            let fallback = if exact.iter().any(Option::is_none) {
                cycle::closed_walks::<f64>(target, None, max_len)
            } else {
                Vec::new()
            };
            Ok(exact
                .iter()
                .enumerate()
                .map(|(i, v)| match v {
                    Some(x) => HomValue::Exact(*x),
                    None => HomValue::Real {
                        value: fallback[i].unwrap(),
                        promoted: true,
                    },
                })
                .collect())
        }
        VertexWeights::Real(w) => Ok(cycle::closed_walks::<f64>(target, Some(w), max_len)
            .into_iter()
            .map(|v| HomValue::real(v.unwrap()))
            .collect()),
    }
}

/// Dynamic program over a nice tree decomposition of the pattern.
pub fn hom_treedec(
    pattern: &Graph,
    td: &TreeDecomposition,
    target: &Graph,
    weights: &VertexWeights,
) -> Result<HomValue> {
    weights.check(target)?;
    td.validate(pattern)?;
    if target.num_vertices() == 0 {
        return Ok(HomValue::Exact(u128::from(pattern.num_vertices() == 0)));
    }
    treedec::check_table_size(td, target.num_vertices())?;
    run(
        weights,
        || Ok(treedec::treedec_dp::<u128>(pattern, td, target, None)),
        |w| Ok(treedec::treedec_dp::<f64>(pattern, td, target, w)),
    )
}

/// Picks the counter matching the pattern's shape: trees use the tree
/// recursion, cycles use closed walks, everything else the decomposition.
pub fn algorithm_for(pattern: &Pattern) -> Algorithm {
    if pattern.graph().is_tree() {
        Algorithm::Tree
    } else if pattern.family() == Family::Cycle {
        Algorithm::Cycle
    } else {
        Algorithm::TreeDecomposition
    }
}

pub fn hom_with(algorithm: Algorithm, pattern: &Pattern, target: &Graph, weights: &VertexWeights) -> Result<HomValue> {
    match algorithm {
        Algorithm::Brute => hom_brute(pattern.graph(), target, weights),
        Algorithm::Tree => hom_tree(pattern.graph(), target, weights),
        Algorithm::Cycle => {
            let g = pattern.graph();
            let is_cycle = g.num_vertices() >= 2
                && g.num_edges() == if g.num_vertices() == 2 { 1 } else { g.num_vertices() }
                && (0..g.num_vertices()).all(|v| g.degree(v) == if g.num_vertices() == 2 { 1 } else { 2 })
                && g.is_connected();
            if !is_cycle {
                return Err(Error::Domain("closed-walk counting needs a cycle pattern".into()));
            }
            hom_cycle(g.num_vertices(), target, weights)
        }
        Algorithm::TreeDecomposition => {
            let td = pattern.decomposition()?;
            hom_treedec(pattern.graph(), &td, target, weights)
        }
    }
}

/// `hom(F, (G, w))` with the counter chosen by [`algorithm_for`].
pub fn hom(pattern: &Pattern, target: &Graph, weights: &VertexWeights) -> Result<HomValue> {
    hom_with(algorithm_for(pattern), pattern, target, weights)
}

/// `(F, φ)`-convolution `Σ_π Π_u φ(x(π(u)))`.
pub fn convolution(pattern: &Pattern, fg: &FeaturedGraph, phi: &PhiFunction) -> Result<HomValue> {
    hom(pattern, fg.graph(), &phi.vertex_weights(fg)?)
}

/// `t(F, G) = hom(F, G) / |V(G)|^|V(F)|`.
pub fn hom_density(pattern: &Pattern, target: &Graph) -> Result<f64> {
    density(pattern, target, &VertexWeights::Unit)
}

/// `t(F, (G, x)) = hom(F, (G, x / Σ_v x(v)))`.
pub fn hom_weighted_density(pattern: &Pattern, target: &WeightedGraph) -> Result<f64> {
    density(pattern, target.graph(), &VertexWeights::from(target))
}

/// Density with weights normalised to sum to one. Unit weights normalise
/// to `1/n`, which is the unweighted density.
pub fn density(pattern: &Pattern, target: &Graph, weights: &VertexWeights) -> Result<f64> {
    let n = target.num_vertices();
    if n == 0 {
        return Err(Error::Domain("density of an empty target graph".into()));
    }
    match weights {
        VertexWeights::Unit => {
            let value = hom(pattern, target, weights)?.as_f64();
            Ok(value / (n as f64).powi(pattern.size() as i32))
        }
        VertexWeights::Real(w) => {
            let total: f64 = w.iter().sum();
            if !(total > 0.0) {
                return Err(Error::Domain("weighted density needs a positive total weight".into()));
            }
            let normalised = VertexWeights::Real(w.iter().map(|x| x / total).collect());
            Ok(hom(pattern, target, &normalised)?.as_f64())
        }
    }
}

/// `[hom(F, G) : F ∈ patterns]` in catalog order. Cycle-family patterns
/// share a single closed-walk pass.
pub fn hom_values(patterns: &[Pattern], target: &Graph, weights: &VertexWeights) -> Result<Vec<HomValue>> {
    let longest_cycle = patterns
        .iter()
        .filter(|p| algorithm_for(p) == Algorithm::Cycle)
        .map(Pattern::size)
        .max();
    let walks = match longest_cycle {
        Some(k) => hom_cycles(k, target, weights)?,
        None => Vec::new(),
    };
    patterns
        .iter()
        .map(|p| match algorithm_for(p) {
            Algorithm::Cycle => Ok(walks[p.size() - 2]),
            _ => hom(p, target, weights),
        })
        .collect()
}

/// Real-valued hom vector, optionally as densities.
pub fn hom_vector(patterns: &[Pattern], target: &Graph, weights: &VertexWeights, density: bool) -> Result<Vec<f64>> {
    let values = hom_values(patterns, target, weights)?;
    if !density {
        return Ok(values.iter().map(HomValue::as_f64).collect());
    }
    patterns.iter().map(|p| self::density(p, target, weights)).collect()
}
