mod common;

use common::{Adj, Kind};
use tstrd_core::enumerate::{all_graphs, connected_graphs, random_graphs};
use tstrd_core::profile::matching_number;
use tstrd_core::solvers::{
    all_min_dominating_sets, compute_bundle_with, enumerate_optimal_tstrd, optimal_functions,
};
use tstrd_core::{Engine, FunctionClass, Graph};

fn class_of(kind: Kind) -> FunctionClass {
    match kind {
        Kind::Roman => FunctionClass::Roman,
        Kind::TotalRoman => FunctionClass::TotalRoman,
        Kind::Strong => FunctionClass::StrongRoman,
        Kind::TotalStrong => FunctionClass::TotalStrongRoman,
    }
}

fn assert_bundle_matches(g: &Graph) {
    let a = Adj::of(g);
    for engine in [Engine::Oracle, Engine::BranchBound] {
        let b = compute_bundle_with(g, engine);
        let ctx = format!("{g:?} with {engine:?}");
        assert_eq!(b.gamma, common::gamma(&a), "gamma on {ctx}");
        assert_eq!(b.gamma_t, common::gamma_t(&a), "gamma_t on {ctx}");
        assert_eq!(Some(b.gamma_r), common::weight(&a, Kind::Roman), "gamma_r on {ctx}");
        assert_eq!(b.gamma_tr, common::weight(&a, Kind::TotalRoman), "gamma_tr on {ctx}");
        assert_eq!(Some(b.gamma_strd), common::weight(&a, Kind::Strong), "gamma_strd on {ctx}");
        assert_eq!(b.gamma_tstrd, common::weight(&a, Kind::TotalStrong), "gamma_tstrd on {ctx}");
    }
}

#[test]
fn every_graph_up_to_order_five_matches_brute_force() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            assert_bundle_matches(&g);
        }
    }
}

#[test]
fn connected_order_six_matches_brute_force() {
    let graphs = connected_graphs(6);
    assert_eq!(graphs.len(), 112);
    for g in &graphs {
        assert_bundle_matches(g);
    }
}

#[test]
fn seeded_random_graphs_match_brute_force() {
    for g in random_graphs(25, 7, 0.45, 11) {
        assert_bundle_matches(&g);
    }
}

#[test]
fn optimal_function_lists_match_brute_force() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let a = Adj::of(&g);
            for kind in Kind::ALL {
                let (w, expected) = common::optimum(&a, kind).unwrap();
                let got = optimal_functions(&g, class_of(kind)).unwrap();
                assert_eq!(got.weight, w, "{g:?} {kind:?}");
                let got: Vec<Vec<u32>> = got.functions.iter().map(|f| f.labels().to_vec()).collect();
                assert_eq!(got, expected, "{g:?} {kind:?}");
            }
        }
    }
}

#[test]
fn small_optimal_sets() {
    let p3 = enumerate_optimal_tstrd(&Graph::path(3).unwrap()).unwrap();
    assert_eq!(p3.weight, 3);
    let p3: Vec<&[u32]> = p3.functions.iter().map(|f| f.labels()).collect();
    assert!(p3.contains(&[0, 2, 1].as_slice()) && p3.contains(&[1, 2, 0].as_slice()));

    let k2 = enumerate_optimal_tstrd(&Graph::path(2).unwrap()).unwrap();
    assert_eq!(k2.weight, 2);
    assert_eq!(k2.functions.len(), 1);
    assert_eq!(k2.functions[0].labels(), &[1, 1]);

    let c3 = enumerate_optimal_tstrd(&Graph::cycle(3).unwrap()).unwrap();
    assert_eq!(c3.weight, 3);
    assert!(c3.functions.iter().any(|f| f.labels() == [1, 1, 1]));
}

#[test]
fn minimum_dominating_sets_match_brute_force() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let (_, expected) = common::min_dominating_sets(&Adj::of(&g), false).unwrap();
            let mut got = all_min_dominating_sets(&g);
            got.iter_mut().for_each(|s| s.sort());
            got.sort();
            assert_eq!(got, expected, "{g:?}");
        }
    }
}

#[test]
fn matching_number_matches_brute_force() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            assert_eq!(matching_number(&g), common::matching_number(&g), "{g:?}");
        }
    }
}

#[test]
fn named_graph_values() {
    let k33 = Graph::complete_bipartite(3, 3).unwrap();
    let q3 = Graph::new(
        8,
        &[(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap();
    let k4 = Graph::complete(4).unwrap();
    let k5 = Graph::complete(5).unwrap();
    let c4 = Graph::cycle(4).unwrap();
    let c6 = Graph::cycle(6).unwrap();
    for g in [&k33, &q3, &k4, &k5, &c4, &c6] {
        assert_bundle_matches(g);
    }
    assert_eq!(common::gamma_t(&Adj::of(&c6)), Some(4));
    assert_eq!(common::weight(&Adj::of(&k4), Kind::TotalStrong), Some(3));
}

#[test]
fn petersen_value_matches_brute_force() {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    let petersen = Graph::new(10, &edges).unwrap();
    let expected = common::weight(&Adj::of(&petersen), Kind::TotalStrong);
    assert_eq!(compute_bundle_with(&petersen, Engine::BranchBound).gamma_tstrd, expected);
    assert_eq!(compute_bundle_with(&petersen, Engine::Oracle).gamma_tstrd, expected);
}
