mod common;

use proptest::prelude::*;
use specyc::detectors::{
    has_triangle_packing, matching_number, matching_number_exhaustive, max_fan, triangle_packing,
};
use specyc::search::{spex, Predicate, SpexParams};
use specyc::{canonical_form, from_graph6, spectral_radius, to_graph6, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(9)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
    }

    #[test]
    fn canonical_form_separates_classes(a in graph(6), b in graph(6)) {
        let same = a.order() == b.order() && common::brute_canonical(&a) == common::brute_canonical(&b);
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), same);
    }

    #[test]
    fn spectral_radius_matches_dense_eigensolver(g in graph(14)) {
        let rho = spectral_radius(&g, 1e-12).unwrap().rho;
        prop_assert!((rho - common::jacobi_largest(&g)).abs() < 1e-8);
    }

    #[test]
    fn perron_vector_is_an_eigenvector(g in graph(20)) {
        prop_assume!(g.size() > 0 && g.is_connected());
        let s = spectral_radius(&g, 1e-12).unwrap();
        let max = s.perron.iter().cloned().fold(0.0, f64::max);
        prop_assert!((max - 1.0).abs() < 1e-12);
        for v in 0..g.order() {
            let ax: f64 = g.neighbors(v).map(|w| s.perron[w]).sum();
            prop_assert!((ax - s.rho * s.perron[v]).abs() < 1e-7);
            prop_assert!(s.perron[v] > 0.0);
        }
    }

    #[test]
    fn blossom_agrees_with_exhaustive_matching(g in graph(16)) {
        prop_assert_eq!(matching_number(&g), matching_number_exhaustive(&g));
    }

    #[test]
    fn packing_matches_oracle_and_grows_with_edges(g in graph(8), u in 0usize..8, v in 0usize..8) {
        let p = triangle_packing(&g).unwrap();
        prop_assert_eq!(p.nu, common::triangle_packing_number(&g));
        p.witness.validate(&g).unwrap();
        prop_assert_eq!(has_triangle_packing(&g, p.nu).unwrap().found(), true);
        prop_assert_eq!(has_triangle_packing(&g, p.nu + 1).unwrap().found(), false);
        let n = g.order();
        if u < n && v < n && u != v {
            let mut h = g.clone();
            h.add_edge(u, v).unwrap();
            prop_assert!(triangle_packing(&h).unwrap().nu >= p.nu);
        }
    }

    #[test]
    fn fan_matches_oracle(g in graph(8)) {
        let f = max_fan(&g);
        prop_assert_eq!(f.k, common::fan_number(&g));
        if let Some(w) = &f.witness {
            w.validate(&g).unwrap();
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hillclimb_results_satisfy_their_predicate(
        n in 6usize..14,
        k in 1usize..4,
        seed in any::<u64>(),
        fan in any::<bool>(),
    ) {
        let pred = if fan { Predicate::FanKFree(k) } else { Predicate::GammaKFree(k) };
        let mut p = SpexParams::hillclimb(n, pred, seed);
        p.restarts = 3;
        let r = spex(&p).unwrap();
        let g = from_graph6(&r.best).unwrap();
        prop_assert!(g.is_connected());
        prop_assert!(pred.holds(&g).unwrap());
        prop_assert!((spectral_radius(&g, 1e-12).unwrap().rho - r.objective).abs() < 1e-8);
    }
}
