//! Vertex labelings and the four Roman-domination function classes.
//!
//! Every validator reports all violations it finds, in ascending vertex
//! order, so a rejected labeling can be audited by hand.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexMask};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling {
    labels: Vec<u32>,
}

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Self {
        Labeling { labels }
    }

    pub fn zeros(order: usize) -> Self {
        Labeling { labels: vec![0; order] }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<u32> {
        self.labels
    }

    pub fn graph_order(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn set(&mut self, v: usize, label: u32) {
        self.labels[v] = label;
    }

    pub fn weight(&self) -> u32 {
        self.labels.iter().sum()
    }

    /// Vertices labeled 0.
    pub fn b0(&self) -> Vec<usize> {
        self.vertices_where(|l| l == 0)
    }

    /// Vertices labeled 1.
    pub fn b1(&self) -> Vec<usize> {
        self.vertices_where(|l| l == 1)
    }

    /// Vertices labeled 2 or more.
    pub fn b2(&self) -> Vec<usize> {
        self.vertices_where(|l| l >= 2)
    }

    fn vertices_where(&self, pred: impl Fn(u32) -> bool) -> Vec<usize> {
        (0..self.labels.len()).filter(|&v| pred(self.labels[v])).collect()
    }

    pub(crate) fn zero_mask(&self) -> VertexMask {
        self.mask_where(|l| l == 0)
    }

    pub(crate) fn positive_mask(&self) -> VertexMask {
        self.mask_where(|l| l > 0)
    }

    fn mask_where(&self, pred: impl Fn(u32) -> bool) -> VertexMask {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| pred(l))
            .fold(0, |m, (v, _)| m | bit(v))
    }
}

impl From<Vec<u32>> for Labeling {
    fn from(labels: Vec<u32>) -> Self {
        Labeling::new(labels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Violation {
    /// A 0-vertex with no neighbor in `B2`.
    UnguardedZero { vertex: usize },
    /// A 0-vertex whose strongest `B2` neighbor is too weak for the number
    /// of zeros it has to cover.
    WeakDefender {
        zero_vertex: usize,
        best_defender: usize,
        required_label: u32,
        actual_label: u32,
    },
    /// A positive vertex with no positive neighbor.
    IsolatedPositive { vertex: usize },
    LabelOverCap { vertex: usize, cap: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Verdict {
            valid: violations.is_empty(),
            violations,
        }
    }
}

/// Label a defender needs to protect `zero_neighbors` zero-labeled
/// neighbors under the strong rule.
#[inline]
pub fn strong_requirement(zero_neighbors: usize) -> u32 {
    1 + (zero_neighbors as u32).div_ceil(2)
}

/// The global label cap `⌈Δ/2⌉ + 1` for strong Roman functions.
pub fn strong_cap(g: &Graph) -> u32 {
    (g.max_degree() as u32).div_ceil(2) + 1
}

fn check_size(g: &Graph, f: &Labeling) -> Result<()> {
    if f.graph_order() != g.order() {
        return Err(Error::SizeMismatch {
            labels: f.graph_order(),
            order: g.order(),
        });
    }
    Ok(())
}

fn cap_violations(f: &Labeling, cap: u32, out: &mut Vec<Violation>) {
    for (v, &l) in f.labels().iter().enumerate() {
        if l > cap {
            out.push(Violation::LabelOverCap { vertex: v, cap });
        }
    }
}

fn roman_violations(g: &Graph, f: &Labeling, out: &mut Vec<Violation>) {
    for v in f.b0() {
        if !g.neighbors(v).any(|u| f.get(u) == 2) {
            out.push(Violation::UnguardedZero { vertex: v });
        }
    }
}

fn strong_violations(g: &Graph, f: &Labeling, out: &mut Vec<Violation>) {
    let zeros = f.zero_mask();
    for v in f.b0() {
        // (slack, defender, required, actual) for the best B2 neighbor
        let mut best: Option<(i64, usize, u32, u32)> = None;
        for u in g.neighbors(v) {
            let label = f.get(u);
            if label < 2 {
                continue;
            }
            let required = strong_requirement((g.neighbor_mask(u) & zeros).count_ones() as usize);
            let slack = label as i64 - required as i64;
            if best.is_none_or(|(s, ..)| slack > s) {
                best = Some((slack, u, required, label));
            }
        }
        match best {
            None => out.push(Violation::UnguardedZero { vertex: v }),
            Some((slack, u, required, actual)) if slack < 0 => {
                out.push(Violation::WeakDefender {
                    zero_vertex: v,
                    best_defender: u,
                    required_label: required,
                    actual_label: actual,
                })
            }
            Some(_) => {}
        }
    }
}

fn isolated_positive_violations(g: &Graph, f: &Labeling, out: &mut Vec<Violation>) {
    let positive = f.positive_mask();
    for v in 0..g.order() {
        if positive & bit(v) != 0 && g.neighbor_mask(v) & positive == 0 {
            out.push(Violation::IsolatedPositive { vertex: v });
        }
    }
}

/// Roman dominating function: labels in {0,1,2}, every 0 adjacent to a 2.
pub fn validate_rd(g: &Graph, f: &Labeling) -> Result<Verdict> {
    check_size(g, f)?;
    let mut out = Vec::new();
    cap_violations(f, 2, &mut out);
    roman_violations(g, f, &mut out);
    Ok(Verdict::from_violations(out))
}

/// Total Roman dominating function: an RD function whose positive vertices
/// induce a subgraph without isolated vertices.
pub fn validate_trd(g: &Graph, f: &Labeling) -> Result<Verdict> {
    check_size(g, f)?;
    let mut out = Vec::new();
    cap_violations(f, 2, &mut out);
    roman_violations(g, f, &mut out);
    isolated_positive_violations(g, f, &mut out);
    Ok(Verdict::from_violations(out))
}

/// Strong Roman dominating function: every 0-vertex has a neighbor `u`
/// with `f(u) >= 1 + ⌈|N(u) ∩ B0| / 2⌉`, labels capped at `⌈Δ/2⌉ + 1`.
pub fn validate_strd(g: &Graph, f: &Labeling) -> Result<Verdict> {
    check_size(g, f)?;
    let mut out = Vec::new();
    cap_violations(f, strong_cap(g), &mut out);
    strong_violations(g, f, &mut out);
    Ok(Verdict::from_violations(out))
}

/// Total strong Roman dominating function. Undefined on graphs with an
/// isolated vertex.
pub fn validate_tstrd(g: &Graph, f: &Labeling) -> Result<Verdict> {
    check_size(g, f)?;
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    let mut out = Vec::new();
    cap_violations(f, strong_cap(g), &mut out);
    strong_violations(g, f, &mut out);
    isolated_positive_violations(g, f, &mut out);
    Ok(Verdict::from_violations(out))
}
