//! Exact solvers for the six domination parameters.
//!
//! Labeling-based parameters (`γ_R`, `γ_tR`, `γ_StR`, `γᵗ_StR`) have two
//! engines: a plain odometer over every label vector ([`Engine::Oracle`])
//! and a pruned depth-first search ([`Engine::BranchBound`]). Set-based
//! parameters (`γ`, `γ_t`) are found by scanning vertex subsets in order of
//! increasing size.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, mask_iter, mask_of, Graph, VertexMask};
use crate::labeling::{
    strong_cap, strong_requirement, validate_rd, validate_strd, validate_trd, validate_tstrd,
    Labeling, Verdict,
};

/// Default order cap for full enumeration of optimal functions.
pub const ENUMERATION_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionClass {
    Roman,
    TotalRoman,
    StrongRoman,
    TotalStrongRoman,
}

impl FunctionClass {
    pub fn is_total(self) -> bool {
        matches!(self, FunctionClass::TotalRoman | FunctionClass::TotalStrongRoman)
    }

    fn is_strong(self) -> bool {
        matches!(self, FunctionClass::StrongRoman | FunctionClass::TotalStrongRoman)
    }

    /// Largest label an optimal function can use on a vertex of degree
    /// `degree`: a vertex never has more than `degree` zero neighbors.
    pub fn vertex_cap(self, degree: usize) -> u32 {
        if self.is_strong() {
            strong_requirement(degree)
        } else {
            2
        }
    }

    /// Codomain cap used by the validators.
    pub fn global_cap(self, g: &Graph) -> u32 {
        if self.is_strong() {
            strong_cap(g)
        } else {
            2
        }
    }

    /// Whether a vertex labeled `label` with `zero_neighbors` zero neighbors
    /// protects each of them.
    #[inline]
    fn defends(self, label: u32, zero_neighbors: usize) -> bool {
        if self.is_strong() {
            label >= 2 && label >= strong_requirement(zero_neighbors)
        } else {
            label == 2
        }
    }

    pub fn validate(self, g: &Graph, f: &Labeling) -> Result<Verdict> {
        match self {
            FunctionClass::Roman => validate_rd(g, f),
            FunctionClass::TotalRoman => validate_trd(g, f),
            FunctionClass::StrongRoman => validate_strd(g, f),
            FunctionClass::TotalStrongRoman => validate_tstrd(g, f),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    Oracle,
    #[default]
    BranchBound,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Engine::Oracle),
            "bb" | "branch-bound" => Ok(Engine::BranchBound),
            other => Err(Error::Parse(format!("unknown engine `{other}`"))),
        }
    }
}

/// Parameter identifiers, in the order they appear in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Param {
    Gamma,
    GammaT,
    GammaR,
    GammaTR,
    GammaStR,
    GammaTStR,
}

impl Param {
    pub const ALL: [Param; 6] = [
        Param::Gamma,
        Param::GammaT,
        Param::GammaR,
        Param::GammaTR,
        Param::GammaStR,
        Param::GammaTStR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::Gamma => "gamma",
            Param::GammaT => "gamma_t",
            Param::GammaR => "gamma_r",
            Param::GammaTR => "gamma_tr",
            Param::GammaStR => "gamma_str",
            Param::GammaTStR => "gamma_tstr",
        }
    }

    fn class(self) -> Option<FunctionClass> {
        match self {
            Param::GammaR => Some(FunctionClass::Roman),
            Param::GammaTR => Some(FunctionClass::TotalRoman),
            Param::GammaStR => Some(FunctionClass::StrongRoman),
            Param::GammaTStR => Some(FunctionClass::TotalStrongRoman),
            Param::Gamma | Param::GammaT => None,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown parameter `{s}`")))
    }
}

/// The six parameters of one graph. Total variants are `None` (infeasible)
/// exactly when the graph has an isolated vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamBundle {
    pub gamma: u32,
    pub gamma_t: Option<u32>,
    pub gamma_r: u32,
    pub gamma_tr: Option<u32>,
    pub gamma_strd: u32,
    pub gamma_tstrd: Option<u32>,
}

impl ParamBundle {
    pub fn get(&self, p: Param) -> Option<u32> {
        match p {
            Param::Gamma => Some(self.gamma),
            Param::GammaT => self.gamma_t,
            Param::GammaR => Some(self.gamma_r),
            Param::GammaTR => self.gamma_tr,
            Param::GammaStR => Some(self.gamma_strd),
            Param::GammaTStR => self.gamma_tstrd,
        }
    }
}

pub fn compute_bundle(g: &Graph) -> ParamBundle {
    compute_bundle_with(g, Engine::BranchBound)
}

pub fn compute_bundle_with(g: &Graph, engine: Engine) -> ParamBundle {
    let total = !g.has_isolated_vertex();
    let weight = |class| min_weight(g, class, engine).expect("non-total classes are always feasible");
    ParamBundle {
        gamma: gamma(g),
        gamma_t: gamma_t(g).ok(),
        gamma_r: weight(FunctionClass::Roman),
        gamma_tr: total.then(|| weight(FunctionClass::TotalRoman)),
        gamma_strd: weight(FunctionClass::StrongRoman),
        gamma_tstrd: total.then(|| weight(FunctionClass::TotalStrongRoman)),
    }
}

pub fn param(g: &Graph, p: Param, engine: Engine) -> Result<u32> {
    match p.class() {
        Some(class) => min_weight(g, class, engine),
        None if p == Param::Gamma => Ok(gamma(g)),
        None => gamma_t(g),
    }
}

// ---------------------------------------------------------------------------
// Dominating sets

pub fn is_dominating(g: &Graph, set: VertexMask) -> bool {
    mask_iter(set).fold(set, |m, v| m | g.neighbor_mask(v)) == g.all_mask()
}

pub fn is_total_dominating(g: &Graph, set: VertexMask) -> bool {
    mask_iter(set).fold(0, |m, v| m | g.neighbor_mask(v)) == g.all_mask()
}

/// Every vertex is dominated (in the closed sense) by exactly one member.
pub fn is_efficient_dominating_set(g: &Graph, set: &[usize]) -> bool {
    let set = mask_of(set);
    (0..g.order()).all(|v| (g.closed_neighbor_mask(v) & set).count_ones() == 1)
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order of the
/// sorted member lists; stops early when `f` returns `false`.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(VertexMask) -> bool) {
    fn go(
        start: usize,
        n: usize,
        left: usize,
        acc: VertexMask,
        f: &mut dyn FnMut(VertexMask) -> bool,
    ) -> bool {
        if left == 0 {
            return f(acc);
        }
        for v in start..=n - left {
            if !go(v + 1, n, left - 1, acc | bit(v), f) {
                return false;
            }
        }
        true
    }
    if k <= n {
        go(0, n, k, 0, &mut f);
    }
}

fn min_sets(g: &Graph, pred: impl Fn(VertexMask) -> bool, all: bool) -> Vec<VertexMask> {
    let n = g.order();
    for k in 0..=n {
        let mut found = Vec::new();
        for_each_combination(n, k, |m| {
            if pred(m) {
                found.push(m);
                return all;
            }
            true
        });
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}

/// Domination number `γ`, summed over components.
pub fn gamma(g: &Graph) -> u32 {
    per_component(g, |h| min_dominating_set(h).len() as u32)
}

/// Total domination number `γ_t`.
pub fn gamma_t(g: &Graph) -> Result<u32> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    Ok(per_component(g, |h| {
        min_total_dominating_set(h).expect("isolated-free").len() as u32
    }))
}

/// Lexicographically first minimum dominating set.
pub fn min_dominating_set(g: &Graph) -> Vec<usize> {
    mask_iter(min_sets(g, |m| is_dominating(g, m), false)[0]).collect()
}

/// Every minimum dominating set, in lexicographic order.
pub fn all_min_dominating_sets(g: &Graph) -> Vec<Vec<usize>> {
    min_sets(g, |m| is_dominating(g, m), true)
        .into_iter()
        .map(|m| mask_iter(m).collect())
        .collect()
}

/// Lexicographically first minimum total dominating set.
pub fn min_total_dominating_set(g: &Graph) -> Result<Vec<usize>> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    Ok(mask_iter(min_sets(g, |m| is_total_dominating(g, m), false)[0]).collect())
}

fn per_component(g: &Graph, f: impl Fn(&Graph) -> u32) -> u32 {
    let comps = g.components();
    if comps.len() == 1 {
        return f(g);
    }
    comps
        .iter()
        .map(|c| f(&g.induced_subgraph(c).expect("subgraph of a valid graph")))
        .sum()
}

// ---------------------------------------------------------------------------
// Labeling-based parameters

pub fn gamma_r(g: &Graph) -> u32 {
    min_weight(g, FunctionClass::Roman, Engine::BranchBound).unwrap()
}

pub fn gamma_tr(g: &Graph) -> Result<u32> {
    min_weight(g, FunctionClass::TotalRoman, Engine::BranchBound)
}

pub fn gamma_strd(g: &Graph) -> u32 {
    min_weight(g, FunctionClass::StrongRoman, Engine::BranchBound).unwrap()
}

pub fn gamma_tstrd(g: &Graph, engine: Engine) -> Result<u32> {
    min_weight(g, FunctionClass::TotalStrongRoman, engine)
}

/// Minimum weight of a `class` function on `g`. Branch-and-bound solves
/// each component separately; the oracle always scans the whole graph.
pub fn min_weight(g: &Graph, class: FunctionClass, engine: Engine) -> Result<u32> {
    if class.is_total() && g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    Ok(match engine {
        Engine::Oracle => oracle_optimum(g, class, false).0,
        Engine::BranchBound => per_component(g, |h| {
            let mut s = Search::new(h, class, false);
            s.run();
            s.best
        }),
    })
}

/// One optimal function of `class`, lexicographically smallest.
pub fn optimal_labeling(g: &Graph, class: FunctionClass) -> Result<Labeling> {
    Ok(optimal_functions(g, class)?.functions.swap_remove(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalSet {
    pub weight: u32,
    /// Every optimal function, lexicographic by label vector.
    pub functions: Vec<Labeling>,
}

/// All minimum-weight TStRD functions, for graphs up to [`ENUMERATION_CAP`].
pub fn enumerate_optimal_tstrd(g: &Graph) -> Result<OptimalSet> {
    enumerate_optimal_tstrd_capped(g, ENUMERATION_CAP)
}

pub fn enumerate_optimal_tstrd_capped(g: &Graph, cap: usize) -> Result<OptimalSet> {
    if g.order() > cap {
        return Err(Error::InstanceTooLarge {
            order: g.order(),
            cap,
        });
    }
    optimal_functions(g, FunctionClass::TotalStrongRoman)
}

/// All optimal functions of `class` (no order cap; callers bound the size).
pub fn optimal_functions(g: &Graph, class: FunctionClass) -> Result<OptimalSet> {
    if class.is_total() && g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    let mut s = Search::new(g, class, true);
    s.run();
    let mut functions: Vec<Labeling> = s
        .found
        .into_iter()
        .map(|l| Labeling::new(l.into_iter().map(u32::from).collect()))
        .collect();
    functions.sort();
    Ok(OptimalSet {
        weight: s.best,
        functions,
    })
}

/// Exhaustive scan of `{0..=global cap}^n`, checking each vector with the
/// public validator. Returns the optimum and, when `collect` is set, every
/// optimal vector in lexicographic order.
pub fn oracle_optimum(g: &Graph, class: FunctionClass, collect: bool) -> (u32, Vec<Labeling>) {
    let n = g.order();
    let cap = class.global_cap(g);
    let mut labels = vec![0u32; n];
    let mut best = u32::MAX;
    let mut found = Vec::new();
    loop {
        let weight: u32 = labels.iter().sum();
        if weight <= best {
            let f = Labeling::new(labels.clone());
            if class.validate(g, &f).map(|v| v.valid).unwrap_or(false) {
                if weight < best {
                    best = weight;
                    found.clear();
                }
                if collect {
                    found.push(f);
                }
            }
        }
        // odometer, last vertex fastest so the scan is lexicographic
        let mut i = n;
        loop {
            if i == 0 {
                return (best, found);
            }
            i -= 1;
            if labels[i] < cap {
                labels[i] += 1;
                break;
            }
            labels[i] = 0;
        }
    }
}

const UNSET: u8 = u8::MAX;

/// Depth-first search over per-vertex label domains `0..=vertex_cap`,
/// vertices in descending-degree order. A partial assignment is abandoned
/// when an assigned zero can no longer be defended, an assigned positive
/// vertex can no longer get a positive neighbor, or the partial weight plus
/// the number of unassigned vertices that can no longer be zero reaches the
/// incumbent.
struct Search<'a> {
    g: &'a Graph,
    class: FunctionClass,
    order: Vec<usize>,
    caps: Vec<u8>,
    labels: Vec<u8>,
    assigned: VertexMask,
    zeros: VertexMask,
    positive: VertexMask,
    /// Collect every optimal vector instead of one.
    collect: bool,
    best: u32,
    found: Vec<Vec<u8>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, class: FunctionClass, collect: bool) -> Self {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let caps = (0..n)
            .map(|v| class.vertex_cap(g.degree(v)) as u8)
            .collect();
        // All-ones is always feasible here (totals are only searched on
        // isolated-free graphs), so weight n is a safe starting incumbent.
        let found = if collect { Vec::new() } else { vec![vec![1u8; n]] };
        Search {
            g,
            class,
            order,
            caps,
            labels: vec![UNSET; n],
            assigned: 0,
            zeros: 0,
            positive: 0,
            collect,
            best: n as u32,
            found,
        }
    }

    fn run(&mut self) {
        self.dfs(0, 0);
    }

    #[inline]
    fn meets(&self, u: usize, extra_zeros: usize) -> bool {
        let z = (self.g.neighbor_mask(u) & self.zeros).count_ones() as usize + extra_zeros;
        self.class.defends(self.labels[u] as u32, z)
    }

    fn consistent(&self) -> bool {
        let unassigned = self.g.all_mask() & !self.assigned;
        let mut defenders: VertexMask = 0;
        for u in mask_iter(self.positive) {
            if self.meets(u, 0) {
                defenders |= bit(u);
            }
        }
        for w in mask_iter(self.zeros) {
            if self.g.neighbor_mask(w) & (unassigned | defenders) == 0 {
                return false;
            }
        }
        if self.class.is_total() {
            for p in mask_iter(self.positive) {
                if self.g.neighbor_mask(p) & (unassigned | self.positive) == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Unassigned vertices that cannot take label 0 any more.
    fn forced_positive(&self) -> u32 {
        let unassigned = self.g.all_mask() & !self.assigned;
        let mut spare: VertexMask = 0;
        for u in mask_iter(self.positive) {
            if self.meets(u, 1) {
                spare |= bit(u);
            }
        }
        mask_iter(unassigned)
            .filter(|&w| self.g.neighbor_mask(w) & (unassigned | spare) == 0)
            .count() as u32
    }

    fn dfs(&mut self, depth: usize, weight: u32) {
        let bound = weight + self.forced_positive();
        if bound > self.best || (!self.collect && bound == self.best) {
            return;
        }
        if depth == self.order.len() {
            debug_assert!(self.is_complete_valid());
            if weight < self.best {
                self.best = weight;
                self.found.clear();
            }
            if self.collect || self.found.is_empty() {
                self.found.push(self.labels.clone());
            } else {
                self.found[0] = self.labels.clone();
            }
            return;
        }
        let v = self.order[depth];
        for label in 0..=self.caps[v] {
            self.labels[v] = label;
            self.assigned |= bit(v);
            if label == 0 {
                self.zeros |= bit(v);
            } else {
                self.positive |= bit(v);
            }
            if self.consistent() {
                self.dfs(depth + 1, weight + label as u32);
            }
            self.zeros &= !bit(v);
            self.positive &= !bit(v);
        }
        self.assigned &= !bit(v);
        self.labels[v] = UNSET;
    }

    fn is_complete_valid(&self) -> bool {
        let f = Labeling::new(self.labels.iter().map(|&l| l as u32).collect());
        self.class.validate(self.g, &f).map(|v| v.valid).unwrap_or(false)
    }
}
