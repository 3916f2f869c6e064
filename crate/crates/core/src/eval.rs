//! Stratified cross-validation with a multinomial logistic regression, plus
//! runtime measurements.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::DatasetBundle;
use crate::embed::{embed_dataset, EmbedConfig, ScalerParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{hom_values, VertexWeights};
use crate::pattern::enumerate_trees;

/// Test indices of each fold; the training set is the complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Folds {
    pub test: Vec<Vec<usize>>,
    /// Set when some class has fewer members than there are folds.
    pub warning: Option<String>,
}

impl Folds {
    pub fn train(&self, fold: usize) -> Vec<usize> {
        let mut train: Vec<usize> = self
            .test
            .iter()
            .enumerate()
            .filter(|&(f, _)| f != fold)
            .flat_map(|(_, t)| t.iter().copied())
            .collect();
        train.sort_unstable();
        train
    }
}

/// Shuffles each class with a generator seeded by `seed`, then deals the
/// classes one after another round-robin into `k` folds. The dealing
/// position carries over between classes, so fold sizes differ by at most one.
pub fn stratified_kfold(labels: &[usize], k: usize, seed: u64) -> Result<Folds> {
    if k < 2 {
        return Err(Error::Parameter(format!("need at least 2 folds, got {k}")));
    }
    if labels.len() < k {
        return Err(Error::Parameter(format!(
            "{} samples cannot fill {k} folds",
            labels.len()
        )));
    }
    let num_classes = labels.iter().max().map_or(0, |m| m + 1);
    let mut by_class = vec![Vec::new(); num_classes];
    for (i, &l) in labels.iter().enumerate() {
        by_class[l].push(i);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut test = vec![Vec::new(); k];
    let mut next = 0;
    let mut small = Vec::new();
    for (class, members) in by_class.iter_mut().enumerate() {
        if !members.is_empty() && members.len() < k {
            small.push(class);
        }
        members.shuffle(&mut rng);
        for &i in members.iter() {
            test[next].push(i);
            next = (next + 1) % k;
        }
    }
    test.iter_mut().for_each(|t| t.sort_unstable());
    let warning =
        (!small.is_empty()).then(|| format!("classes {small:?} have fewer than {k} members; some folds miss them"));
    Ok(Folds { test, warning })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogRegConfig {
    pub l2: f64,
    pub learning_rate: f64,
    pub epochs: usize,
}

impl Default for LogRegConfig {
    fn default() -> Self {
        LogRegConfig {
            l2: 1e-3,
            learning_rate: 0.1,
            epochs: 500,
        }
    }
}

/// Softmax regression trained by full-batch gradient descent from zero.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LogisticRegression {
    /// `weights[c][j]` for class `c`, feature `j`.
    pub weights: Vec<Vec<f64>>,
    pub bias: Vec<f64>,
}

fn softmax_into(scores: &mut [f64]) {
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut total = 0.0;
    for s in scores.iter_mut() {
        *s = (*s - max).exp();
        total += *s;
    }
    scores.iter_mut().for_each(|s| *s /= total);
}

impl LogisticRegression {
    /// Minimises mean cross-entropy plus `l2/2 · ‖W‖²` (bias unpenalised).
    pub fn fit(x: &[Vec<f64>], y: &[usize], num_classes: usize, config: &LogRegConfig) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::Dimension {
                expected: x.len(),
                actual: y.len(),
            });
        }
        if x.is_empty() {
            return Err(Error::Domain("cannot train on zero samples".into()));
        }
        if let Some(&bad) = y.iter().find(|&&l| l >= num_classes) {
            return Err(Error::Parameter(format!("label {bad} with only {num_classes} classes")));
        }
        let d = x[0].len();
        if let Some(row) = x.iter().find(|r| r.len() != d) {
            return Err(Error::Dimension {
                expected: d,
                actual: row.len(),
            });
        }
        let n = x.len() as f64;
        let mut model = LogisticRegression {
            weights: vec![vec![0.0; d]; num_classes],
            bias: vec![0.0; num_classes],
        };
        let mut grad_w = vec![vec![0.0; d]; num_classes];
        let mut grad_b = vec![0.0; num_classes];
        let mut probs = vec![0.0; num_classes];
        for _ in 0..config.epochs {
            grad_w.iter_mut().for_each(|g| g.iter_mut().for_each(|v| *v = 0.0));
            grad_b.iter_mut().for_each(|v| *v = 0.0);
            for (row, &label) in x.iter().zip(y) {
                model.scores_into(row, &mut probs);
                softmax_into(&mut probs);
                probs[label] -= 1.0;
                for (c, &err) in probs.iter().enumerate() {
                    grad_b[c] += err;
                    for (g, v) in grad_w[c].iter_mut().zip(row) {
                        *g += err * v;
                    }
                }
            }
            for c in 0..num_classes {
                model.bias[c] -= config.learning_rate * grad_b[c] / n;
                for (w, g) in model.weights[c].iter_mut().zip(&grad_w[c]) {
                    *w -= config.learning_rate * (g / n + config.l2 * *w);
                }
            }
        }
        Ok(model)
    }

    fn scores_into(&self, row: &[f64], out: &mut [f64]) {
        for ((s, w), b) in out.iter_mut().zip(&self.weights).zip(&self.bias) {
            *s = b + w.iter().zip(row).map(|(a, v)| a * v).sum::<f64>();
        }
    }

    pub fn num_features(&self) -> usize {
        self.weights.first().map_or(0, Vec::len)
    }

    pub fn predict_proba(&self, row: &[f64]) -> Result<Vec<f64>> {
        if row.len() != self.num_features() {
            return Err(Error::Dimension {
                expected: self.num_features(),
                actual: row.len(),
            });
        }
        let mut p = vec![0.0; self.bias.len()];
        self.scores_into(row, &mut p);
        softmax_into(&mut p);
        Ok(p)
    }

    /// Most probable class; ties go to the smallest index.
    pub fn predict(&self, row: &[f64]) -> Result<usize> {
        let p = self.predict_proba(row)?;
        let mut best = 0;
        for (c, &v) in p.iter().enumerate() {
            if v > p[best] {
                best = c;
            }
        }
        Ok(best)
    }
}

pub fn accuracy(predicted: &[usize], truth: &[usize]) -> f64 {
    if truth.is_empty() {
        return 0.0;
    }
    let hits = predicted.iter().zip(truth).filter(|(a, b)| a == b).count();
    hits as f64 / truth.len() as f64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CvConfig {
    pub folds: usize,
    pub repeats: usize,
    pub classifier: LogRegConfig,
}

impl Default for CvConfig {
    fn default() -> Self {
        CvConfig {
            folds: 10,
            repeats: 10,
            classifier: LogRegConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CvReport {
    /// `repeats × folds` accuracies, repeat-major.
    pub fold_accuracies: Vec<f64>,
    pub mean: f64,
    /// Population standard deviation over all folds.
    pub stddev: f64,
    pub seed: u64,
    pub config: serde_json::Value,
    pub warnings: Vec<String>,
    pub wall_time_seconds: f64,
}

/// Repeat `r` draws its folds from seed `seed + r`.
pub fn cross_validate_matrix(rows: &[Vec<f64>], labels: &[usize], config: &CvConfig, seed: u64) -> Result<CvReport> {
    let start = Instant::now();
    if rows.len() != labels.len() {
        return Err(Error::Dimension {
            expected: rows.len(),
            actual: labels.len(),
        });
    }
    if config.repeats == 0 {
        return Err(Error::Parameter("repeats must be positive".into()));
    }
    let num_classes = labels.iter().max().map_or(0, |m| m + 1);
    let mut jobs = Vec::new();
    let mut warnings = Vec::new();
    for r in 0..config.repeats {
        let folds = stratified_kfold(labels, config.folds, seed.wrapping_add(r as u64))?;
        if let Some(w) = &folds.warning {
            if !warnings.contains(w) {
                warnings.push(w.clone());
            }
        }
        for f in 0..config.folds {
            jobs.push((folds.train(f), folds.test[f].clone()));
        }
    }
    let fold_accuracies = jobs
        .par_iter()
        .map(|(train, test)| {
            let pick = |idx: &[usize]| idx.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>();
            let scaler = ScalerParams::fit(&pick(train))?;
            let x_train = scaler.transform(&pick(train))?;
            let y_train: Vec<usize> = train.iter().map(|&i| labels[i]).collect();
            let model = LogisticRegression::fit(&x_train, &y_train, num_classes, &config.classifier)?;
            let x_test = scaler.transform(&pick(test))?;
            let predicted = x_test.iter().map(|r| model.predict(r)).collect::<Result<Vec<_>>>()?;
            let truth: Vec<usize> = test.iter().map(|&i| labels[i]).collect();
            Ok(accuracy(&predicted, &truth))
        })
        .collect::<Result<Vec<f64>>>()?;
    let (mean, stddev) = mean_std(&fold_accuracies);
    Ok(CvReport {
        fold_accuracies,
        mean,
        stddev,
        seed,
        config: serde_json::to_value(config)?,
        warnings,
        wall_time_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Embeds `bundle` and cross-validates; the report echoes both configs.
pub fn cross_validate(bundle: &DatasetBundle, embed: &EmbedConfig, config: &CvConfig, seed: u64) -> Result<CvReport> {
    let start = Instant::now();
    let matrix = embed_dataset(bundle, embed)?;
    let mut report = cross_validate_matrix(matrix.rows(), bundle.labels(), config, seed)?;
    report.config = serde_json::json!({
        "dataset": bundle.name(),
        "provenance": bundle.provenance(),
        "embed": embed,
        "cv": config,
    });
    report.wall_time_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

pub fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub dataset: String,
    pub num_graphs: usize,
    pub mean_vertices: f64,
    pub num_columns: usize,
    pub embed_seconds: f64,
    pub train_seconds: f64,
    pub mean_accuracy: f64,
    pub seed: u64,
    pub config: serde_json::Value,
}

/// Times one embedding pass and one full cross-validation separately.
pub fn bench_runtime(bundle: &DatasetBundle, embed: &EmbedConfig, config: &CvConfig, seed: u64) -> Result<BenchReport> {
    let start = Instant::now();
    let matrix = embed_dataset(bundle, embed)?;
    let embed_seconds = start.elapsed().as_secs_f64();
    let start = Instant::now();
    let cv = cross_validate_matrix(matrix.rows(), bundle.labels(), config, seed)?;
    let train_seconds = start.elapsed().as_secs_f64();
    Ok(BenchReport {
        dataset: bundle.name().to_string(),
        num_graphs: bundle.len(),
        mean_vertices: bundle.mean_vertices(),
        num_columns: matrix.num_cols(),
        embed_seconds,
        train_seconds,
        mean_accuracy: cv.mean,
        seed,
        config: serde_json::json!({ "embed": embed, "cv": config }),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingPoint {
    pub num_vertices: usize,
    pub num_edges: usize,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingReport {
    pub max_tree_size: usize,
    pub points: Vec<ScalingPoint>,
    /// `seconds[i+1] / seconds[i]` divided by the growth of `|V| + |E|`.
    pub normalised_ratios: Vec<f64>,
    pub seed: u64,
}

/// Times tree-pattern counting on sparse random graphs whose size doubles
/// from point to point (average degree held near `avg_degree`). Each point
/// takes the best of `trials` runs to damp scheduler noise.
pub fn tree_scaling(
    base_vertices: usize,
    doublings: usize,
    avg_degree: f64,
    max_tree_size: usize,
    trials: usize,
    seed: u64,
) -> Result<ScalingReport> {
    if base_vertices < 2 || trials == 0 {
        return Err(Error::Parameter("need at least 2 vertices and one trial".into()));
    }
    let patterns = enumerate_trees(max_tree_size)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    for step in 0..=doublings {
        let n = base_vertices << step;
        let m = ((avg_degree * n as f64) / 2.0).round() as usize;
        let g = random_sparse(n, m, &mut rng)?;
        let mut best = f64::INFINITY;
        for _ in 0..trials {
            let start = Instant::now();
            let values = hom_values(&patterns, &g, &VertexWeights::Unit)?;
            std::hint::black_box(values);
            best = best.min(start.elapsed().as_secs_f64());
        }
        points.push(ScalingPoint {
            num_vertices: n,
            num_edges: g.num_edges(),
            seconds: best,
        });
    }
    let normalised_ratios = points
        .windows(2)
        .map(|w| {
            let growth = (w[1].num_vertices + w[1].num_edges) as f64 / (w[0].num_vertices + w[0].num_edges) as f64;
            (w[1].seconds / w[0].seconds) * (2.0 / growth)
        })
        .collect();
    Ok(ScalingReport {
        max_tree_size,
        points,
        normalised_ratios,
        seed,
    })
}

/// `m` distinct uniformly random edges on `n` vertices.
fn random_sparse<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    let max_edges = n * (n - 1) / 2;
    if m > max_edges {
        return Err(Error::Parameter(format!("{m} edges do not fit on {n} vertices")));
    }
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folds_partition_and_stratify() {
        let labels: Vec<usize> = (0..150).map(|i| i / 15).collect();
        let folds = stratified_kfold(&labels, 10, 4).unwrap();
        let mut all: Vec<usize> = folds.test.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..150).collect::<Vec<_>>());
        for t in &folds.test {
            assert_eq!(t.len(), 15);
            for c in 0..10 {
                let count = t.iter().filter(|&&i| labels[i] == c).count();
                assert!((1..=2).contains(&count));
            }
        }
        assert!(folds.warning.is_none());
        assert_eq!(folds, stratified_kfold(&labels, 10, 4).unwrap());
        assert!(stratified_kfold(&labels, 1, 0).is_err());
    }

    #[test]
    fn small_classes_warn() {
        let labels = vec![0, 0, 0, 0, 1];
        assert!(stratified_kfold(&labels, 2, 0).unwrap().warning.is_some());
    }

    #[test]
    fn separable_toy_is_learned() {
        let x = vec![vec![-2.0, 0.0], vec![-1.0, 0.5], vec![1.0, 0.0], vec![2.0, -0.5]];
        let y = vec![0, 0, 1, 1];
        let m = LogisticRegression::fit(&x, &y, 2, &LogRegConfig::default()).unwrap();
        let pred: Vec<usize> = x.iter().map(|r| m.predict(r).unwrap()).collect();
        assert_eq!(pred, y);
        assert!(m.predict(&[1.0]).is_err());
    }

    #[test]
    fn identical_rows_predict_majority() {
        let x = vec![vec![1.0, 2.0]; 6];
        let y = vec![0, 1, 1, 1, 2, 2];
        let m = LogisticRegression::fit(&x, &y, 3, &LogRegConfig::default()).unwrap();
        assert_eq!(m.predict(&[1.0, 2.0]).unwrap(), 1);
    }

    #[test]
    fn cv_is_deterministic() {
        let rows: Vec<Vec<f64>> = (0..40).map(|i| vec![(i % 2) as f64, (i % 7) as f64]).collect();
        let labels: Vec<usize> = (0..40).map(|i| i % 2).collect();
        let config = CvConfig {
            repeats: 2,
            folds: 4,
            ..CvConfig::default()
        };
        let a = cross_validate_matrix(&rows, &labels, &config, 9).unwrap();
        let b = cross_validate_matrix(&rows, &labels, &config, 9).unwrap();
        assert_eq!(a.fold_accuracies, b.fold_accuracies);
        assert_eq!(a.fold_accuracies.len(), 8);
        assert_eq!(a.mean, 1.0);
    }
}
