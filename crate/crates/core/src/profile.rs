//! Structural invariants: distances, girth, diameter, matching number.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{bit, mask_iter, Graph, VertexMask};

/// A hop count that may be unbounded (no path, or no cycle).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extent {
    Finite(usize),
    Unbounded,
}

/// Girth of a graph: `Unbounded` exactly when it is acyclic.
pub type GirthValue = Extent;
pub type Distance = Extent;

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(v) => Some(v),
            Extent::Unbounded => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Extent::Finite(_))
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{v}"),
            Extent::Unbounded => f.write_str("inf"),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(v) => s.serialize_u64(*v as u64),
            Extent::Unbounded => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub max_degree: usize,
    pub min_degree: usize,
    pub diameter: Distance,
    pub girth: GirthValue,
    pub matching_number: usize,
    pub leaves: Vec<usize>,
    pub support_vertices: Vec<usize>,
    pub is_connected: bool,
    pub is_tree: bool,
    pub has_isolated_vertex: bool,
}

pub fn profile(g: &Graph) -> StructuralProfile {
    StructuralProfile {
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        diameter: diameter(g),
        girth: girth(g),
        matching_number: matching_number(g),
        leaves: g.leaves(),
        support_vertices: g.support_vertices(),
        is_connected: g.is_connected(),
        is_tree: g.is_tree(),
        has_isolated_vertex: g.has_isolated_vertex(),
    }
}

/// BFS distances from `source`; `None` for unreachable vertices.
pub(crate) fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut seen = bit(source);
    let mut frontier = bit(source);
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next: VertexMask = 0;
        for v in mask_iter(frontier) {
            next |= g.neighbor_mask(v);
        }
        next &= !seen;
        for v in mask_iter(next) {
            dist[v] = Some(d);
        }
        seen |= next;
        frontier = next;
    }
    dist
}

pub fn distance_matrix(g: &Graph) -> Vec<Vec<Distance>> {
    (0..g.order())
        .map(|s| {
            bfs_distances(g, s)
                .into_iter()
                .map(|d| d.map_or(Extent::Unbounded, Extent::Finite))
                .collect()
        })
        .collect()
}

/// Largest pairwise distance; `Unbounded` when disconnected.
pub fn diameter(g: &Graph) -> Distance {
    let mut best = 0;
    for s in 0..g.order() {
        for d in bfs_distances(g, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Extent::Unbounded,
            }
        }
    }
    Extent::Finite(best)
}

pub fn girth(g: &Graph) -> GirthValue {
    shortest_cycle(g).map_or(Extent::Unbounded, |c| Extent::Finite(c.len()))
}

/// A shortest cycle as a vertex sequence, found by a BFS from every root in
/// ascending order; the first cycle of minimum length wins.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut best: Option<Vec<usize>> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w && parent[w] != u {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_none_or(|b| len < b.len()) {
                        if let Some(cycle) = close_cycle(&parent, root, u, w) {
                            debug_assert_eq!(cycle.len(), len);
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == 3) {
            break;
        }
    }
    best
}

/// Joins the tree paths `root..u` and `root..w` through edge `u-w`; `None`
/// when the two paths share more than the root.
fn close_cycle(parent: &[usize], root: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let walk = |mut x: usize| {
        let mut p = vec![x];
        while x != root {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = walk(u);
    let pw = walk(w);
    let su: VertexMask = pu.iter().fold(0, |m, &x| m | bit(x));
    let sw: VertexMask = pw.iter().fold(0, |m, &x| m | bit(x));
    if su & sw != bit(root) {
        return None;
    }
    // root .. u, then w .. (excluding root)
    let mut cycle: Vec<usize> = pu.into_iter().rev().collect();
    cycle.extend(pw.into_iter().take_while(|&x| x != root));
    Some(cycle)
}

/// A shortest path between the lexicographically first pair at maximum
/// distance, preferring the lowest-id predecessor at each step. `None` when
/// the graph is disconnected.
pub fn diametral_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut best: Option<(usize, usize, usize)> = None;
    for s in 0..n {
        let dist = bfs_distances(g, s);
        for (t, d) in dist.iter().enumerate().skip(s + 1) {
            let d = (*d)?;
            if best.is_none_or(|(bd, _, _)| d > bd) {
                best = Some((d, s, t));
            }
        }
    }
    let (_, s, t) = match best {
        Some(b) => b,
        None => return Some(vec![0]),
    };
    let dist_t = bfs_distances(g, t);
    let mut path = vec![s];
    let mut cur = s;
    while cur != t {
        let d = dist_t[cur].unwrap();
        cur = g
            .neighbors(cur)
            .find(|&w| dist_t[w] == Some(d - 1))
            .unwrap();
        path.push(cur);
    }
    Some(path)
}

/// Maximum matching size by exhaustive branching on the lowest unremoved
/// vertex (left unmatched, or matched to each available neighbor), memoized
/// on the set of removed vertices.
pub fn matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, removed: VertexMask, memo: &mut HashMap<VertexMask, usize>) -> usize {
        let free = g.all_mask() & !removed;
        // vertices that still have an available neighbor
        let live = mask_iter(free)
            .filter(|&v| g.neighbor_mask(v) & free != 0)
            .fold(0, |m, v| m | bit(v));
        if live == 0 {
            return 0;
        }
        let key = !live;
        if let Some(&r) = memo.get(&key) {
            return r;
        }
        let v = live.trailing_zeros() as usize;
        let mut best = go(g, !live | bit(v), memo);
        for u in mask_iter(g.neighbor_mask(v) & live) {
            best = best.max(1 + go(g, !live | bit(v) | bit(u), memo));
        }
        memo.insert(key, best);
        best
    }
    go(g, 0, &mut HashMap::new())
}
