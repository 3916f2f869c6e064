//! Algebraic invariants of homomorphism numbers and of the evaluation helpers.

mod common;

use homcount::embed::ScalerParams;
use homcount::eval::stratified_kfold;
use homcount::graph::{Graph, VertexPermutation};
use homcount::hom::{density, hom, hom_brute, hom_tree, VertexWeights};
use homcount::pattern::{canonical_graph_code, canonical_tree_code, Pattern};
use proptest::prelude::*;

const UNIT: VertexWeights = VertexWeights::Unit;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)).prop_map(move |parents| {
            let edges: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (i + 1, p.index(i + 1)))
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = VertexPermutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|m| VertexPermutation::new(m).unwrap())
}

fn exact(g: &Graph, f: &Graph) -> u128 {
    hom_brute(f, g, &UNIT).unwrap().exact().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disjoint_patterns_multiply(f1 in graph(3), f2 in graph(3), g in graph(6)) {
        let u = f1.disjoint_union(&f2);
        prop_assert_eq!(exact(&g, &u), exact(&g, &f1) * exact(&g, &f2));
    }

    #[test]
    fn connected_patterns_add_over_target_union(f in tree(4), g in graph(5), h in graph(5)) {
        let p = Pattern::tree(f).unwrap();
        let sum = hom(&p, &g, &UNIT).unwrap().exact().unwrap() + hom(&p, &h, &UNIT).unwrap().exact().unwrap();
        prop_assert_eq!(hom(&p, &g.disjoint_union(&h), &UNIT).unwrap().exact().unwrap(), sum);
    }

    #[test]
    fn trees_into_complete_graphs(f in tree(7), n in 1usize..8) {
        let k = f.num_vertices() as u32;
        let expected = n as u128 * (n as u128 - 1).pow(k - 1);
        prop_assert_eq!(hom_tree(&f, &Graph::complete(n), &UNIT).unwrap().exact().unwrap(), expected);
    }

    #[test]
    fn weights_scale_with_pattern_order(f in tree(5), g in graph(6), c in 0.5f64..3.0) {
        let n = g.num_vertices();
        let w: Vec<f64> = (0..n).map(|i| 0.25 + i as f64 / n as f64).collect();
        let scaled: Vec<f64> = w.iter().map(|x| c * x).collect();
        let a = hom_tree(&f, &g, &VertexWeights::Real(w)).unwrap().as_f64();
        let b = hom_tree(&f, &g, &VertexWeights::Real(scaled)).unwrap().as_f64();
        prop_assert!(common::relative_eq(b, a * c.powi(f.num_vertices() as i32), 1e-10));
    }

    #[test]
    fn unweighted_density_is_a_probability(f in tree(5), g in graph(7)) {
        let d = density(&Pattern::tree(f).unwrap(), &g, &UNIT).unwrap();
        prop_assert!((0.0..=1.0).contains(&d));
    }

    #[test]
    fn canonical_codes_ignore_labelling((g, sigma) in graph(7).prop_flat_map(|g| {
        let n = g.num_vertices();
        (Just(g), permutation(n))
    })) {
        let h = g.permute(&sigma).unwrap();
        prop_assert_eq!(canonical_graph_code(&g), canonical_graph_code(&h));
        if g.is_tree() {
            prop_assert_eq!(canonical_tree_code(&g).unwrap(), canonical_tree_code(&h).unwrap());
        }
    }

    #[test]
    fn folds_partition_and_balance(
        labels in proptest::collection::vec(0usize..3, 10..60),
        k in 2usize..6,
        seed in any::<u64>(),
    ) {
        // Make the classes contiguous so every class occurs.
        let mut labels = labels;
        let classes = *labels.iter().max().unwrap() + 1;
        for c in 0..classes {
            labels[c] = c;
        }
        let folds = stratified_kfold(&labels, k, seed).unwrap();
        let mut seen = vec![0usize; labels.len()];
        for f in &folds.test {
            for &i in f {
                seen[i] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        for c in 0..classes {
            let per: Vec<usize> = folds.test.iter().map(|f| f.iter().filter(|&&i| labels[i] == c).count()).collect();
            prop_assert!(per.iter().max().unwrap() - per.iter().min().unwrap() <= 1);
        }
        prop_assert_eq!(folds.test, stratified_kfold(&labels, k, seed).unwrap().test);
    }

    #[test]
    fn scaler_centres_training_columns(rows in proptest::collection::vec(proptest::collection::vec(-1e3f64..1e3, 3), 2..20)) {
        let s = ScalerParams::fit(&rows).unwrap();
        let z = s.transform(&rows).unwrap();
        for j in 0..3 {
            let mean: f64 = z.iter().map(|r| r[j]).sum::<f64>() / z.len() as f64;
            prop_assert!(mean.abs() < 1e-9);
        }
    }
}
