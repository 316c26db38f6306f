mod common;

use common::{Adj, Kind};
use proptest::prelude::*;
use tstrd_core::canon::{canonical_code, is_isomorphic};
use tstrd_core::io::{emit_graph6, parse_edge_list, parse_graph6};
use tstrd_core::labeling::{strong_cap, validate_rd, validate_strd, validate_trd, validate_tstrd};
use tstrd_core::solvers::{compute_bundle, min_weight, optimal_functions};
use tstrd_core::verify::{sweep, Corpus, CorpusKind};
use tstrd_core::{Engine, FunctionClass, Graph, Labeling, TheoremId, Violation};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_with_labels(max_n: usize) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let cap = strong_cap(&g);
        let n = g.order();
        (Just(g), proptest::collection::vec(0..=cap, n))
    })
}

fn graph_with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        let text = emit_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(10)) {
        let mut text = format!("{} {}\n", g.order(), g.size());
        for (u, v) in g.edges() {
            text.push_str(&format!("{u} {v}\n"));
        }
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_vertex_names((g, perm) in graph_with_permutation(9)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(10)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.size() + g.complement().size(), n * (n - 1) / 2);
    }

    #[test]
    fn validators_match_the_definitions((g, labels) in graph_with_labels(8)) {
        let a = Adj::of(&g);
        let f = Labeling::new(labels.clone());
        let strong_ok = validate_strd(&g, &f).unwrap().valid;
        prop_assert_eq!(strong_ok, common::is_valid(&a, &labels, Kind::Strong));
        if !g.has_isolated_vertex() {
            prop_assert_eq!(validate_tstrd(&g, &f).unwrap().valid, common::is_valid(&a, &labels, Kind::TotalStrong));
        }
        if labels.iter().all(|&l| l <= 2) {
            prop_assert_eq!(validate_rd(&g, &f).unwrap().valid, common::is_valid(&a, &labels, Kind::Roman));
            prop_assert_eq!(validate_trd(&g, &f).unwrap().valid, common::is_valid(&a, &labels, Kind::TotalRoman));
        } else {
            let over = validate_rd(&g, &f).unwrap().violations;
            let flagged = over.iter().any(|v| matches!(v, Violation::LabelOverCap { cap: 2, .. }));
            prop_assert!(flagged);
        }
    }

    #[test]
    fn class_inclusions((g, labels) in graph_with_labels(8)) {
        prop_assume!(!g.has_isolated_vertex());
        let f = Labeling::new(labels.clone());
        let tstr = validate_tstrd(&g, &f).unwrap().valid;
        let strd = validate_strd(&g, &f).unwrap().valid;
        prop_assert!(!tstr || strd);
        if labels.iter().all(|&l| l <= 2) {
            let trd = validate_trd(&g, &f).unwrap().valid;
            let rd = validate_rd(&g, &f).unwrap().valid;
            prop_assert!(!trd || rd);
            prop_assert!(!tstr || trd);
            let light_defenders = f.b2().iter().all(|&u| g.neighbors(u).filter(|&x| f.get(x) == 0).count() <= 2);
            prop_assert!(!(trd && light_defenders) || tstr);
        }
    }

    #[test]
    fn raising_a_weak_defender_clears_its_violation((g, labels) in graph_with_labels(8)) {
        let f = Labeling::new(labels);
        let before = validate_strd(&g, &f).unwrap().violations;
        for v in &before {
            if let Violation::WeakDefender { zero_vertex, best_defender, required_label, .. } = *v {
                let mut raised = f.clone();
                raised.set(best_defender, required_label);
                let after = validate_strd(&g, &raised).unwrap().violations;
                let still_flagged = after.iter().any(|w| match w {
                    Violation::WeakDefender { zero_vertex: z, .. } | Violation::UnguardedZero { vertex: z } => *z == zero_vertex,
                    _ => false,
                });
                prop_assert!(!still_flagged);
                prop_assert!(after.iter().all(|w| before.contains(w)));
            }
        }
    }

    #[test]
    fn bundle_inequalities(g in graph_strategy(7)) {
        let b = compute_bundle(&g);
        let isolated = g.has_isolated_vertex();
        prop_assert_eq!(b.gamma_t.is_none(), isolated);
        prop_assert_eq!(b.gamma_tr.is_none(), isolated);
        prop_assert_eq!(b.gamma_tstrd.is_none(), isolated);
        prop_assert!(b.gamma_r <= 2 * b.gamma);
        prop_assert!(b.gamma <= b.gamma_r);
        prop_assert!(b.gamma_strd <= b.gamma_tstrd.unwrap_or(u32::MAX));
        if let (Some(t), Some(tr), Some(ts)) = (b.gamma_t, b.gamma_tr, b.gamma_tstrd) {
            prop_assert!(b.gamma <= t);
            prop_assert!(tr <= ts);
        }
    }

    #[test]
    fn engines_agree(g in graph_strategy(7)) {
        for class in [FunctionClass::Roman, FunctionClass::TotalRoman, FunctionClass::StrongRoman, FunctionClass::TotalStrongRoman] {
            prop_assert_eq!(
                min_weight(&g, class, Engine::Oracle),
                min_weight(&g, class, Engine::BranchBound)
            );
        }
    }

    #[test]
    fn optimal_functions_are_valid_and_sorted(g in graph_strategy(6)) {
        prop_assume!(!g.has_isolated_vertex());
        let set = optimal_functions(&g, FunctionClass::TotalStrongRoman).unwrap();
        prop_assert!(!set.functions.is_empty());
        for f in &set.functions {
            prop_assert_eq!(f.weight(), set.weight);
            prop_assert!(validate_tstrd(&g, f).unwrap().valid);
        }
        prop_assert!(set.functions.windows(2).all(|w| w[0].labels() < w[1].labels()));
    }
}

#[test]
fn sweep_does_not_depend_on_worker_count() {
    let corpus = Corpus::new(CorpusKind::Random { count: 40, n: 7, p: 0.4, seed: 5 });
    let theorems = TheoremId::ALL;
    let run = |workers: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .unwrap()
            .install(|| sweep(&corpus, &theorems).unwrap())
    };
    let one = run(1);
    let three = run(3);
    assert_eq!(one.to_csv().unwrap(), three.to_csv().unwrap());
    assert_eq!(one.to_json(), three.to_json());
}
