//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the solvers or validators under test; graphs are
//! read only through their edge lists.

#![allow(dead_code)]

use tstrd_core::Graph;

pub struct Adj {
    pub n: usize,
    pub nb: Vec<Vec<usize>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut nb = vec![Vec::new(); n];
        for &(u, v) in g.edges() {
            nb[u].push(v);
            nb[v].push(u);
        }
        Adj { n, nb }
    }

    pub fn max_degree(&self) -> usize {
        self.nb.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_isolated(&self) -> bool {
        self.nb.iter().any(Vec::is_empty)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Roman,
    TotalRoman,
    Strong,
    TotalStrong,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Roman, Kind::TotalRoman, Kind::Strong, Kind::TotalStrong];

    fn strong(self) -> bool {
        matches!(self, Kind::Strong | Kind::TotalStrong)
    }

    fn total(self) -> bool {
        matches!(self, Kind::TotalRoman | Kind::TotalStrong)
    }

    fn top(self, a: &Adj) -> u32 {
        if self.strong() {
            (a.max_degree() as u32).div_ceil(2) + 1
        } else {
            2
        }
    }
}

/// Direct transcription of the four definitions.
pub fn is_valid(a: &Adj, f: &[u32], kind: Kind) -> bool {
    for v in 0..a.n {
        if f[v] == 0 {
            let defended = a.nb[v].iter().any(|&u| {
                if kind.strong() {
                    let zeros = a.nb[u].iter().filter(|&&w| f[w] == 0).count() as u32;
                    f[u] >= 2 && f[u] > zeros.div_ceil(2)
                } else {
                    f[u] == 2
                }
            });
            if !defended {
                return false;
            }
        } else if kind.total() && a.nb[v].iter().all(|&u| f[u] == 0) {
            return false;
        }
    }
    true
}

/// Minimum weight and every optimal vector, lexicographically sorted.
/// `None` when no function of the class exists.
pub fn optimum(a: &Adj, kind: Kind) -> Option<(u32, Vec<Vec<u32>>)> {
    if kind.total() && a.has_isolated() {
        return None;
    }
    let top = kind.top(a);
    let mut best = u32::MAX;
    let mut all = Vec::new();
    let mut f = vec![0u32; a.n];
    let total = (top as u64 + 1).pow(a.n as u32);
    for code in 0..total {
        let mut c = code;
        for slot in f.iter_mut().rev() {
            *slot = (c % (top as u64 + 1)) as u32;
            c /= top as u64 + 1;
        }
        let w: u32 = f.iter().sum();
        if w > best || !is_valid(a, &f, kind) {
            continue;
        }
        if w < best {
            best = w;
            all.clear();
        }
        all.push(f.clone());
    }
    Some((best, all))
}

pub fn weight(a: &Adj, kind: Kind) -> Option<u32> {
    optimum(a, kind).map(|(w, _)| w)
}

fn dominates(a: &Adj, set: u64, total: bool) -> bool {
    (0..a.n).all(|v| {
        (!total && set >> v & 1 == 1) || a.nb[v].iter().any(|&u| set >> u & 1 == 1)
    })
}

/// Every minimum dominating set (closed or total), as sorted vertex lists.
pub fn min_dominating_sets(a: &Adj, total: bool) -> Option<(u32, Vec<Vec<usize>>)> {
    if total && a.has_isolated() {
        return None;
    }
    let mut best = u32::MAX;
    let mut sets = Vec::new();
    for set in 0u64..(1 << a.n) {
        let size = set.count_ones();
        if size > best || !dominates(a, set, total) {
            continue;
        }
        if size < best {
            best = size;
            sets.clear();
        }
        sets.push((0..a.n).filter(|&v| set >> v & 1 == 1).collect::<Vec<_>>());
    }
    sets.sort();
    Some((best, sets))
}

pub fn gamma(a: &Adj) -> u32 {
    min_dominating_sets(a, false).unwrap().0
}

pub fn gamma_t(a: &Adj) -> Option<u32> {
    min_dominating_sets(a, true).map(|(w, _)| w)
}

/// Largest set of pairwise disjoint edges, by trying every edge subset.
pub fn matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u64..(1 << edges.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut used = 0u64;
        let ok = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).all(|(_, &(u, v))| {
            let clash = used & (1 << u | 1 << v) != 0;
            used |= 1 << u | 1 << v;
            !clash
        });
        if ok {
            best = size;
        }
    }
    best
}

/// Counts connected graphs of order `n` up to isomorphism by taking the
/// minimum adjacency code over all `n!` permutations of every labeled graph.
pub fn count_connected_unlabeled(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        if !connected(n, &edges) {
            continue;
        }
        let code = perms
            .iter()
            .map(|p| {
                let mut m = vec![vec![false; n]; n];
                for &(u, v) in &edges {
                    m[p[u]][p[v]] = true;
                    m[p[v]][p[u]] = true;
                }
                pairs.iter().fold(0u64, |acc, &(i, j)| acc << 1 | m[i][j] as u64)
            })
            .min()
            .unwrap();
        seen.insert(code);
    }
    seen.len()
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every permutation.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    permutations(a.order())
        .iter()
        .any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}
