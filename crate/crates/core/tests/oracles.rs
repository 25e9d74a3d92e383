mod common;

use std::collections::HashSet;

use rayon::prelude::*;
use specyc::detectors::{
    has_k_edge_disjoint_cycles, has_repeated_cycle_length, matching_number, max_fan,
    triangle_packing,
};
use specyc::search::{
    enumerate, spex, turan_number, Predicate, SpexParams, CONNECTED_COUNTS, GRAPH_COUNTS,
};
use specyc::{from_graph6, Graph};

fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

#[test]
fn enumeration_matches_brute_force_isomorphism_classes() {
    for n in 1..=7 {
        let graphs = enumerate(n, false).unwrap();
        let keys: HashSet<u64> = graphs.par_iter().map(common::brute_canonical).collect();
        assert_eq!(keys.len(), graphs.len(), "duplicate classes at n={n}");
        // orbit-stabiliser: the classes account for every labeled graph
        let labeled: u64 = graphs
            .par_iter()
            .map(|g| common::factorial(n) / common::automorphism_count(g))
            .sum();
        assert_eq!(labeled, 1u64 << (n * (n - 1) / 2), "n={n}");
        assert_eq!(graphs.len() as u64, GRAPH_COUNTS[n]);
    }
    for n in 1..=5 {
        let classes: HashSet<u64> = labeled_graphs(n)
            .map(|g| common::brute_canonical(&g))
            .collect();
        assert_eq!(classes.len() as u64, GRAPH_COUNTS[n]);
        let connected: HashSet<u64> = labeled_graphs(n)
            .filter(|g| g.is_connected())
            .map(|g| common::brute_canonical(&g))
            .collect();
        assert_eq!(connected.len() as u64, CONNECTED_COUNTS[n]);
    }
}

#[test]
fn matching_agrees_with_subset_search() {
    for n in 1..=7 {
        enumerate(n, false).unwrap().par_iter().for_each(|g| {
            assert_eq!(matching_number(g), common::matching_size(g), "{g:?}");
        });
    }
}

#[test]
fn one_cycle_iff_not_a_forest() {
    for n in 1..=7 {
        enumerate(n, false).unwrap().par_iter().for_each(|g| {
            let found = has_k_edge_disjoint_cycles(g, 1).unwrap().found();
            assert_eq!(found, g.size() > g.order() - g.components().len());
        });
    }
}

#[test]
fn dense_small_graphs_have_two_edge_disjoint_cycles() {
    for n in 1..=9 {
        let bad: Vec<Graph> = enumerate(n, false)
            .unwrap()
            .into_par_iter()
            .filter(|g| g.size() >= n + 4 && !has_k_edge_disjoint_cycles(g, 2).unwrap().found())
            .collect();
        assert!(bad.is_empty(), "n={n}: {bad:?}");
    }
}

#[test]
fn repeated_length_detector_matches_cycle_lengths() {
    for n in 3..=7 {
        enumerate(n, true).unwrap().par_iter().for_each(|g| {
            let lengths = common::Raw::new(g).cycle_lengths();
            let expected = lengths.values().any(|&c| c >= 2);
            let d = has_repeated_cycle_length(g).unwrap();
            assert_eq!(d.found(), expected);
            if let Some(w) = d.witness {
                w.validate(g).unwrap();
                assert_eq!(w.cycles.len(), 2);
                assert_eq!(w.cycles[0].len(), w.cycles[1].len());
            }
        });
    }
}

#[test]
fn packing_and_fan_on_disconnected_graphs() {
    for n in 3..=7 {
        enumerate(n, false)
            .unwrap()
            .par_iter()
            .filter(|g| !g.is_connected())
            .for_each(|g| {
                let p = triangle_packing(g).unwrap();
                assert_eq!(p.nu, common::triangle_packing_number(g));
                p.witness.validate(g).unwrap();
                let f = max_fan(g);
                assert_eq!(f.k, common::fan_number(g));
                if let Some(w) = f.witness {
                    w.validate(g).unwrap();
                }
            });
    }
}

#[test]
fn turan_numbers_match_labeled_brute_force() {
    for (n, k) in [(5, 1), (5, 2), (6, 1), (6, 2), (6, 3)] {
        let best = labeled_graphs(n)
            .filter(|g| common::triangle_packing_number(g) < k)
            .map(|g| g.size())
            .max()
            .unwrap();
        assert_eq!(
            turan_number(n, Predicate::GammaKFree(k)).unwrap().max_edges,
            best,
            "n={n} k={k}"
        );
    }
}

#[test]
fn exhaustive_spex_matches_labeled_brute_force() {
    for (n, pred) in [
        (6, Predicate::GammaKFree(1)),
        (6, Predicate::GammaKFree(2)),
        (6, Predicate::FanKFree(2)),
        (5, Predicate::NoRepeatedCycleLength),
        (5, Predicate::NoTwoEdgeDisjointCycles),
    ] {
        let holds = |g: &Graph| match pred {
            Predicate::GammaKFree(k) => common::triangle_packing_number(g) < k,
            Predicate::FanKFree(k) => common::fan_number(g) < k,
            Predicate::NoRepeatedCycleLength => {
                common::Raw::new(g).cycle_lengths().values().all(|&c| c < 2)
            }
            Predicate::NoTwoEdgeDisjointCycles => !common::edge_disjoint_cycles(g, 2),
        };
        let best = labeled_graphs(n)
            .filter(|g| g.is_connected() && holds(g))
            .map(|g| common::jacobi_largest(&g))
            .fold(f64::NEG_INFINITY, f64::max);
        let r = spex(&SpexParams::exhaustive(n, pred)).unwrap();
        assert!(
            (r.objective - best).abs() < 1e-8,
            "{pred}: {} vs {best}",
            r.objective
        );
        assert!(holds(&from_graph6(&r.best).unwrap()));
    }
}
