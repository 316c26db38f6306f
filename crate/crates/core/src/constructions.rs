//! Explicit TStRD labelings that realize the upper bounds, each returned
//! together with the bound it is certified against.
//!
//! Every choice ("some max-degree vertex", "a neighbor of v") resolves to
//! the lowest vertex id, so outputs are reproducible.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{mask_iter, mask_of, Graph, VertexMask};
use crate::labeling::{validate_tstrd, Labeling};
use crate::profile::{diameter, diametral_path, girth, matching_number, shortest_cycle, Extent};
use crate::solvers::{
    gamma, gamma_t, is_dominating, is_total_dominating, min_dominating_set,
    min_total_dominating_set, optimal_labeling, FunctionClass,
};
use crate::theorem::TheoremId;

/// Which branch of the matching-bound construction produced a labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MatchingCase {
    /// `v` dominates the whole graph.
    NoOutside,
    /// The graph induced outside `N[v]` has no isolated vertex.
    NoIsolatedOutside,
    /// The cover is all of `N(v)` and every outside vertex is isolated.
    FullCoverAllIsolated,
    /// The cover is all of `N(v)`, some outside vertices are not isolated.
    FullCoverSomeIsolated,
    /// The cover is a proper part of `N(v)`, every outside vertex isolated.
    PartialCoverAllIsolated,
    /// The cover is a proper part of `N(v)`, some outside vertices are not
    /// isolated.
    PartialCoverSomeIsolated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedLabeling {
    pub labeling: Labeling,
    pub claimed_bound: u32,
    pub theorem: TheoremId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<MatchingCase>,
}

impl CertifiedLabeling {
    pub fn weight(&self) -> u32 {
        self.labeling.weight()
    }
}

fn certify(
    g: &Graph,
    labeling: Labeling,
    claimed_bound: u32,
    theorem: TheoremId,
    case: Option<MatchingCase>,
) -> Result<CertifiedLabeling> {
    let valid = validate_tstrd(g, &labeling)?.valid;
    let weight = labeling.weight();
    if !valid || weight > claimed_bound {
        return Err(Error::CertificateFailed {
            theorem,
            weight,
            bound: claimed_bound,
            valid,
        });
    }
    Ok(CertifiedLabeling {
        labeling,
        claimed_bound,
        theorem,
        case,
    })
}

fn half_up(x: usize) -> u32 {
    x.div_ceil(2) as u32
}

fn lowest(mask: VertexMask) -> usize {
    mask.trailing_zeros() as usize
}

fn min_degree_vertex(g: &Graph) -> usize {
    let d = g.min_degree();
    (0..g.order()).find(|&v| g.degree(v) == d).unwrap()
}

/// Lexicographically first smallest subset of `candidates` whose
/// neighborhoods cover `targets`.
fn min_cover(g: &Graph, candidates: &[usize], targets: VertexMask) -> Vec<usize> {
    fn search(g: &Graph, cands: &[usize], k: usize, start: usize, chosen: &mut Vec<usize>, targets: VertexMask) -> bool {
        if chosen.len() == k {
            let covered = chosen.iter().fold(0, |m, &c| m | g.neighbor_mask(c));
            return targets & !covered == 0;
        }
        for i in start..cands.len() {
            chosen.push(cands[i]);
            if search(g, cands, k, i + 1, chosen, targets) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    for k in 0..=candidates.len() {
        let mut chosen = Vec::with_capacity(k);
        if search(g, candidates, k, 0, &mut chosen, targets) {
            return chosen;
        }
    }
    candidates.to_vec()
}

/// Labeling certified against `n − Δ + α′·⌈(Δ−1)/2⌉`.
pub fn construct_matching_bound(g: &Graph) -> Result<CertifiedLabeling> {
    let n = g.order();
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    if n < 4 {
        return Err(Error::TooSmall { order: n, min: 4 });
    }
    if g.is_star() {
        return Err(Error::StarInput);
    }
    let delta = g.max_degree();
    let top = half_up(delta - 1) + 1;
    let bound = (n - delta) as u32 + matching_number(g) as u32 * half_up(delta - 1);

    let v = (0..n).find(|&v| g.degree(v) == delta).unwrap();
    let nv = g.neighbor_mask(v);
    let outside = g.all_mask() & !g.closed_neighbor_mask(v);
    let isolated: VertexMask = mask_iter(outside)
        .filter(|&x| g.neighbor_mask(x) & outside == 0)
        .fold(0, |m, x| m | (1 << x));

    let mut f = Labeling::zeros(n);
    let case = if isolated == 0 {
        f.set(v, top);
        f.set(lowest(nv), 1);
        for x in mask_iter(outside) {
            f.set(x, 1);
        }
        if outside == 0 {
            MatchingCase::NoOutside
        } else {
            MatchingCase::NoIsolatedOutside
        }
    } else {
        let cands: Vec<usize> = mask_iter(nv).collect();
        let cover = min_cover(g, &cands, isolated);
        let full = cover.len() == cands.len();
        let all_isolated = isolated == outside;
        for &x in &cover {
            f.set(x, top);
        }
        f.set(v, if full { 1 } else { 1 + half_up(delta - cover.len()) });
        if !all_isolated {
            for x in mask_iter(outside & !isolated) {
                f.set(x, 1);
            }
        }
        match (full, all_isolated) {
            (true, true) => MatchingCase::FullCoverAllIsolated,
            (true, false) => MatchingCase::FullCoverSomeIsolated,
            (false, true) => MatchingCase::PartialCoverAllIsolated,
            (false, false) => MatchingCase::PartialCoverSomeIsolated,
        }
    };
    certify(g, f, bound, TheoremId::ThmS, Some(case))
}

/// Labeling certified against `n − ⌊(δ−1)/2⌋`.
pub fn construct_mindeg_bound(g: &Graph) -> Result<CertifiedLabeling> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooSmall { order: n, min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let delta_min = g.min_degree();
    let v = min_degree_vertex(g);
    let u = lowest(g.neighbor_mask(v));
    let mut f = Labeling::new(vec![1; n]);
    for x in g.neighbors(v) {
        f.set(x, 0);
    }
    f.set(v, half_up(delta_min - 1) + 1);
    f.set(u, 1);
    let bound = (n - (delta_min - 1) / 2) as u32;
    certify(g, f, bound, TheoremId::PropMindeg, None)
}

/// Labeling certified against `δ(1 + ⌈(Δ−1)/2⌉) + 1` on diameter-2 graphs.
pub fn construct_diam2_bound(g: &Graph) -> Result<CertifiedLabeling> {
    if diameter(g) != Extent::Finite(2) {
        return Err(Error::WrongDiameter);
    }
    let strong = 1 + half_up(g.max_degree() - 1);
    let v = min_degree_vertex(g);
    let mut f = Labeling::zeros(g.order());
    f.set(v, 1);
    for x in g.neighbors(v) {
        f.set(x, strong);
    }
    let bound = g.min_degree() as u32 * strong + 1;
    certify(g, f, bound, TheoremId::PropDiam2, None)
}

/// Optimal StRD labeling on `g[vertices]`, every other vertex labeled 1.
fn embed_optimal_strd(g: &Graph, vertices: &[usize]) -> Result<Labeling> {
    let sub = g.induced_subgraph(vertices)?;
    let inner = optimal_labeling(&sub, FunctionClass::StrongRoman)?;
    let mut f = Labeling::new(vec![1; g.order()]);
    for (i, &x) in vertices.iter().enumerate() {
        f.set(x, inner.get(i));
    }
    Ok(f)
}

fn require_min_degree(g: &Graph, required: usize) -> Result<()> {
    let actual = g.min_degree();
    if actual < required {
        return Err(Error::MinDegreeTooSmall { actual, required });
    }
    Ok(())
}

/// Labeling certified against `n − ⌊(diam+1)/3⌋` for `δ >= 3`.
pub fn construct_diametral_path_bound(g: &Graph) -> Result<CertifiedLabeling> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    require_min_degree(g, 3)?;
    let path = diametral_path(g).ok_or(Error::Disconnected)?;
    let diam = path.len() - 1;
    let f = embed_optimal_strd(g, &path)?;
    let bound = (g.order() - (diam + 1) / 3) as u32;
    certify(g, f, bound, TheoremId::PropDiampath, None)
}

/// Labeling certified against `n − ⌊g/3⌋` for girth `g >= 4` and `δ >= 3`.
pub fn construct_girth_cycle_bound(g: &Graph) -> Result<CertifiedLabeling> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gi = match girth(g) {
        Extent::Unbounded => return Err(Error::AcyclicInput),
        Extent::Finite(x) if x < 4 => return Err(Error::GirthTooSmall(x)),
        Extent::Finite(x) => x,
    };
    require_min_degree(g, 3)?;
    let cycle = shortest_cycle(g).expect("finite girth has a cycle");
    let f = embed_optimal_strd(g, &cycle)?;
    let bound = (g.order() - gi / 3) as u32;
    certify(g, f, bound, TheoremId::PropGirth, None)
}

/// Labeling certified against `(⌈(Δ−1)/2⌉ + 2)·γ`. Uses `set` when given,
/// otherwise the first minimum dominating set.
pub fn construct_domset_bound(g: &Graph, set: Option<&[usize]>) -> Result<CertifiedLabeling> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    let s: Vec<usize> = match set {
        Some(s) => {
            if s.iter().any(|&x| x >= g.order()) || !is_dominating(g, mask_of(s)) {
                return Err(Error::NotDominatingSet);
            }
            s.to_vec()
        }
        None => min_dominating_set(g),
    };
    let smask = mask_of(&s);
    let top = half_up(g.max_degree() - 1) + 1;
    let mut f = Labeling::zeros(g.order());
    for &x in &s {
        f.set(x, top);
    }
    for &x in &s {
        if g.neighbor_mask(x) & smask == 0 {
            f.set(lowest(g.neighbor_mask(x)), 1);
        }
    }
    let bound = (top + 1) * gamma(g);
    certify(g, f, bound, TheoremId::ThmThree, None)
}

/// Labeling certified against `⌈(Δ+1)/2⌉·γ_t`. Uses `set` when given,
/// otherwise the first minimum total dominating set.
pub fn construct_total_domset_bound(g: &Graph, set: Option<&[usize]>) -> Result<CertifiedLabeling> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    let s: Vec<usize> = match set {
        Some(s) => {
            if s.iter().any(|&x| x >= g.order()) || !is_total_dominating(g, mask_of(s)) {
                return Err(Error::NotTotalDominatingSet);
            }
            s.to_vec()
        }
        None => min_total_dominating_set(g)?,
    };
    let top = 1 + half_up(g.max_degree() - 1);
    let mut f = Labeling::zeros(g.order());
    for &x in &s {
        f.set(x, top);
    }
    let bound = (g.max_degree() as u32 + 1).div_ceil(2) * gamma_t(g)?;
    certify(g, f, bound, TheoremId::Obs1, None)
}

/// Names accepted by [`construct_by_name`].
pub const CONSTRUCTION_NAMES: [&str; 7] = [
    "matching",
    "mindeg",
    "diam2",
    "diametral-path",
    "girth-cycle",
    "domset",
    "total-domset",
];

pub fn construct_by_name(name: &str, g: &Graph) -> Result<CertifiedLabeling> {
    match name {
        "matching" => construct_matching_bound(g),
        "mindeg" => construct_mindeg_bound(g),
        "diam2" => construct_diam2_bound(g),
        "diametral-path" => construct_diametral_path_bound(g),
        "girth-cycle" => construct_girth_cycle_bound(g),
        "domset" => construct_domset_bound(g, None),
        "total-domset" => construct_total_domset_bound(g, None),
        other => Err(Error::Parse(format!(
            "unknown construction `{other}`; expected one of {}",
            CONSTRUCTION_NAMES.join(", ")
        ))),
    }
}
