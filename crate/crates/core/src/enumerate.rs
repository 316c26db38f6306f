//! Exhaustive isomorphism-free graph and tree generation.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{canonical_code, graph_from_code, tree_canonical_string, CanonicalForm};
use crate::graph::{bit, Graph};

/// Largest order [`all_graphs`] accepts.
pub const MAX_GENERAL_ORDER: usize = 8;
/// Largest order [`trees`] accepts.
pub const MAX_TREE_ORDER: usize = 14;

/// One representative of every isomorphism class of graphs on `n`
/// vertices, built by attaching a new vertex to every graph on `n - 1`
/// vertices in every possible way and keeping one graph per canonical code.
/// Output is sorted by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_GENERAL_ORDER).contains(&n), "order must be in 1..={MAX_GENERAL_ORDER}");
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_code(&Graph::empty(1).unwrap()));
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let g = graph_from_code(form);
            for nbrs in 0u64..(1 << (k - 1)) {
                let mut adj: Vec<u64> = (0..k - 1).map(|v| g.neighbor_mask(v)).collect();
                for (v, m) in adj.iter_mut().enumerate() {
                    if nbrs & bit(v) != 0 {
                        *m |= bit(k - 1);
                    }
                }
                adj.push(nbrs);
                next.insert(canonical_code(&Graph::from_adjacency(adj)));
            }
        }
        level = next;
    }
    level.iter().map(graph_from_code).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Every connected graph with `1 <= order <= max_n`, ascending order.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// One representative of every free tree on `n` vertices, built by adding a
/// leaf to every tree on `n - 1` vertices at every vertex.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_TREE_ORDER).contains(&n), "order must be in 1..={MAX_TREE_ORDER}");
    let mut level = vec![Graph::empty(1).unwrap()];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..k - 1 {
                let mut edges = t.edges().to_vec();
                edges.push((v, k - 1));
                let grown = Graph::new(k, &edges).unwrap();
                if seen.insert(tree_canonical_string(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

pub fn trees_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(trees).collect()
}

/// `count` samples of `G(n, p)` from a ChaCha8 stream seeded with `seed`.
pub fn random_graphs(count: usize, n: usize, p: f64, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}
