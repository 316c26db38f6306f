//! Canonical forms and isomorphism tests for small graphs.
//!
//! General graphs use the minimum upper-triangle adjacency code over every
//! vertex ordering compatible with a colour-refined partition; the partition
//! only depends on the isomorphism class, so the minimum does too. Trees use
//! the AHU encoding rooted at the centre, which stays linear even for stars.

use std::collections::HashMap;

use crate::graph::{bit, mask_iter, Graph, VertexMask};

/// Upper limit for [`canonical_code`]: `n(n-1)/2` bits must fit in a `u128`.
pub const CANON_MAX_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub order: usize,
    pub code: u128,
}

/// Stable colour refinement starting from degrees. Colour ids are ranks of
/// sorted signatures, so they are invariant under relabeling.
pub fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let rank: HashMap<&(usize, Vec<usize>), usize> =
            sorted.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let next_classes = sorted.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Minimum adjacency code over all colour-respecting orderings. Bits are
/// emitted column by column (`(0,1), (0,2), (1,2), (0,3), ...`), most
/// significant first, so prefixes can be compared during the search.
pub fn canonical_code(g: &Graph) -> CanonicalForm {
    let n = g.order();
    assert!(n <= CANON_MAX_ORDER, "canonical_code supports n <= {CANON_MAX_ORDER}");
    let colors = refined_colors(g);
    // position i must be filled from the cell `slots[i]`
    let mut slots = colors.clone();
    slots.sort_unstable();
    let total_bits = n * (n.saturating_sub(1)) / 2;

    struct St<'a> {
        g: &'a Graph,
        colors: Vec<usize>,
        slots: Vec<usize>,
        placed: Vec<usize>,
        used: VertexMask,
        best: Option<u128>,
        total_bits: usize,
    }

    fn go(st: &mut St, prefix: u128) {
        let k = st.placed.len();
        let n = st.g.order();
        if k > 0 {
            let bits = k * (k - 1) / 2;
            if let Some(best) = st.best {
                let best_prefix = if st.total_bits == 0 { 0 } else { best >> (st.total_bits - bits) };
                if prefix > best_prefix {
                    return;
                }
            }
        }
        if k == n {
            if st.best.is_none_or(|b| prefix < b) {
                st.best = Some(prefix);
            }
            return;
        }
        let want = st.slots[k];
        for v in 0..n {
            if st.used & bit(v) != 0 || st.colors[v] != want {
                continue;
            }
            let mut code = prefix;
            for &u in &st.placed {
                code = (code << 1) | st.g.has_edge(u, v) as u128;
            }
            st.placed.push(v);
            st.used |= bit(v);
            go(st, code);
            st.used &= !bit(v);
            st.placed.pop();
        }
    }

    let mut st = St {
        g,
        colors,
        slots,
        placed: Vec::with_capacity(n),
        used: 0,
        best: None,
        total_bits,
    };
    go(&mut st, 0);
    CanonicalForm {
        order: n,
        code: st.best.unwrap_or(0),
    }
}

/// Rebuilds the graph a canonical code describes.
pub fn graph_from_code(form: &CanonicalForm) -> Graph {
    let n = form.order;
    let total_bits = n * (n.saturating_sub(1)) / 2;
    let mut adj = vec![0u64; n];
    let mut i = 0;
    for k in 1..n {
        for j in 0..k {
            if (form.code >> (total_bits - 1 - i)) & 1 == 1 {
                adj[j] |= bit(k);
                adj[k] |= bit(j);
            }
            i += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Vertices of the tree centre (one or two).
fn tree_centre(g: &Graph) -> Vec<usize> {
    let mut remaining: VertexMask = g.all_mask();
    let mut degree: Vec<usize> = g.degrees();
    let mut count = g.order();
    let mut layer: Vec<usize> = (0..g.order()).filter(|&v| degree[v] <= 1).collect();
    while count > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            remaining &= !bit(v);
            count -= 1;
            for u in mask_iter(g.neighbor_mask(v) & remaining) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    mask_iter(remaining).collect()
}

fn ahu(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&u| Some(u) != parent)
        .map(|u| ahu(g, u, Some(v)))
        .collect();
    kids.sort_unstable();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

/// AHU canonical string of a tree rooted at its centre; for bicentral trees
/// the smaller of the two encodings.
pub fn tree_canonical_string(g: &Graph) -> String {
    debug_assert!(g.is_tree());
    tree_centre(g)
        .into_iter()
        .map(|c| ahu(g, c, None))
        .min()
        .expect("a tree has a centre")
}

/// Exact isomorphism test.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    match (a.is_tree(), b.is_tree()) {
        (true, true) => tree_canonical_string(a) == tree_canonical_string(b),
        (false, false) => canonical_code(a) == canonical_code(b),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn code_is_invariant_under_relabeling() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let base = canonical_code(&g);
        for p in permutations(6) {
            assert_eq!(canonical_code(&g.permuted(&p)), base);
        }
    }

    #[test]
    fn code_round_trips_to_an_isomorphic_graph() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        let h = graph_from_code(&canonical_code(&g));
        assert_eq!(canonical_code(&h), canonical_code(&g));
        assert_eq!(h.size(), 6);
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two_triangles));
        assert!(!is_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn tree_strings() {
        let p4 = Graph::path(4).unwrap();
        let p4b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(tree_canonical_string(&p4), tree_canonical_string(&p4b));
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_ne!(tree_canonical_string(&p4), tree_canonical_string(&star));
        assert!(is_isomorphic(&p4, &p4b));
        assert_eq!(tree_canonical_string(&Graph::path(1).unwrap()), "()");
    }
}
