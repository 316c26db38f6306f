//! Structural recognizers for the extremal graph classes.

use crate::canon::is_isomorphic;
use crate::families::{fixed_graph, FamilySpec, FixedGraph};
use crate::graph::{bit, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqualityClass {
    /// Connected graphs with `γ_tR = γᵗ_StR = n`: paths, cycles, coronas,
    /// subdivided stars and the families `𝒢` and `ℋ`.
    ThnList,
    /// The eleven graphs listed as attaining the matching bound among
    /// graphs of girth at least four.
    GirthList,
}

pub fn is_path(g: &Graph) -> bool {
    let n = g.order();
    if n == 1 {
        return true;
    }
    g.is_tree() && g.max_degree() <= 2
}

pub fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

/// `cor(F)` for some connected `F`: every non-leaf carries exactly one
/// pendant leaf and the non-leaves are exactly half the vertices. `K_2` is
/// `cor(K_1)`.
pub fn is_corona(g: &Graph) -> bool {
    let n = g.order();
    if !g.is_connected() || n < 2 || n % 2 == 1 {
        return false;
    }
    if n == 2 {
        return true;
    }
    let leaves = g.leaf_mask();
    if leaves.count_ones() as usize != n / 2 {
        return false;
    }
    (0..n)
        .filter(|&v| leaves & bit(v) == 0)
        .all(|v| (g.neighbor_mask(v) & leaves).count_ones() == 1)
}

/// `S(K_{1,k})` for some `k >= 1`.
pub fn is_subdivided_star(g: &Graph) -> bool {
    let n = g.order();
    if !g.is_tree() || n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let k = (n - 1) / 2;
    (0..n).any(|c| {
        g.degree(c) == k
            && g.neighbors(c).all(|m| {
                g.degree(m) == 2 && g.neighbors(m).filter(|&x| x != c).all(|x| g.degree(x) == 1)
            })
    })
}

pub fn in_family_g(g: &Graph) -> bool {
    let n = g.order();
    if n < 6 || n % 2 == 1 || g.size() != n || !g.is_connected() {
        return false;
    }
    let pairs = (n - 4) / 2;
    (0..=pairs).any(|k1| {
        FamilySpec::FamilyG(k1, pairs - k1)
            .realize()
            .is_ok_and(|h| is_isomorphic(g, &h))
    })
}

pub fn in_family_h(g: &Graph) -> bool {
    let n = g.order();
    if !g.is_tree() || n < 6 {
        return false;
    }
    // n = 2 + r + 2(p + q) with p >= q >= 1
    for total in 2..=(n - 2) / 2 {
        let r = n - 2 - 2 * total;
        for q in 1..=total / 2 {
            let p = total - q;
            if FamilySpec::FamilyH(p, q, r)
                .realize()
                .is_ok_and(|h| is_isomorphic(g, &h))
            {
                return true;
            }
        }
    }
    false
}

/// The eleven listed graphs, in listing order.
pub fn girth_list() -> Vec<(&'static str, Graph)> {
    let mut list = vec![
        ("P4", Graph::path(4).unwrap()),
        ("P5", Graph::path(5).unwrap()),
        ("C4", Graph::cycle(4).unwrap()),
        ("C5", Graph::cycle(5).unwrap()),
        ("DS12", FamilySpec::DoubleStar(2, 1).realize().unwrap()),
        ("SK13", fixed_graph(FixedGraph::SK13)),
    ];
    for id in [FixedGraph::F1, FixedGraph::F2, FixedGraph::F3, FixedGraph::F4, FixedGraph::F5] {
        list.push((id.name(), fixed_graph(id)));
    }
    list
}

pub fn recognize_equality_class(g: &Graph, class: EqualityClass) -> bool {
    match class {
        EqualityClass::ThnList => {
            g.is_connected()
                && (is_path(g)
                    || is_cycle(g)
                    || is_corona(g)
                    || is_subdivided_star(g)
                    || in_family_g(g)
                    || in_family_h(g))
        }
        EqualityClass::GirthList => girth_list().iter().any(|(_, h)| is_isomorphic(g, h)),
    }
}
