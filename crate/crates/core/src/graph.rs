//! Immutable simple undirected graphs on vertices `0..order`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so the order is
//! capped at [`MAX_ORDER`]. Every exact routine in this crate is exponential
//! anyway and works far below that cap.

use std::fmt;

use crate::error::GraphError;

pub const MAX_ORDER: usize = 64;

/// Vertex set as a bitmask over `0..order`.
pub type VertexMask = u64;

#[inline]
pub(crate) fn bit(v: usize) -> VertexMask {
    1u64 << v
}

/// Iterate the set bits of a mask in ascending order.
pub(crate) fn mask_iter(mut mask: VertexMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_of(vertices: &[usize]) -> VertexMask {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<VertexMask>,
    /// Sorted, each pair `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints. `(u, v)` and `(v, u)` count as the same edge.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        let mut adj = vec![0; order];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if adj[u] & bit(v) != 0 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        Ok(Graph {
            order,
            adj,
            edges: normalized,
        })
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexMask>) -> Self {
        let order = adj.len();
        debug_assert!((1..=MAX_ORDER).contains(&order));
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            for v in mask_iter(row >> u >> 1) {
                edges.push((u, u + 1 + v));
            }
        }
        Graph { order, adj, edges }
    }

    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Graph::new(order, &[])
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::new(a + b, &edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.order + other.order, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbor_mask(&self, v: usize) -> VertexMask {
        self.adj[v] | bit(v)
    }

    pub fn all_mask(&self) -> VertexMask {
        if self.order == 64 {
            u64::MAX
        } else {
            (1u64 << self.order) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        mask_iter(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn leaf_mask(&self) -> VertexMask {
        (0..self.order)
            .filter(|&v| self.degree(v) == 1)
            .fold(0, |m, v| m | bit(v))
    }

    /// Vertices with at least one leaf neighbor.
    pub fn support_vertices(&self) -> Vec<usize> {
        let leaves = self.leaf_mask();
        (0..self.order)
            .filter(|&v| self.adj[v] & leaves != 0)
            .collect()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen: VertexMask = 0;
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0;
                for v in mask_iter(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(mask_iter(comp).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order && self.is_connected()
    }

    /// A star is `K_{1,k}` with `k >= 1`; `K_2` counts as `K_{1,1}`.
    pub fn is_star(&self) -> bool {
        self.order >= 2
            && self.is_tree()
            && (0..self.order).any(|v| self.degree(v) == self.order - 1)
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_mask();
        let adj = (0..self.order)
            .map(|v| all & !self.adj[v] & !bit(v))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut adj = vec![0; self.order];
        for &(u, v) in &self.edges {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}
