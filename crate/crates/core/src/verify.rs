//! Theorem harness: hypothesis scoping, conclusion checks against exact
//! parameter values, and corpus sweeps.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, is_isomorphic, CANON_MAX_ORDER};
use crate::enumerate::{connected_graphs_up_to, random_graphs, trees_up_to, MAX_GENERAL_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::labeling::Labeling;
use crate::profile::{diameter, girth, matching_number, Extent};
use crate::recognize::{is_corona, is_cycle, is_path, recognize_equality_class, EqualityClass};
use crate::solvers::{
    all_min_dominating_sets, compute_bundle, enumerate_optimal_tstrd, gamma_tstrd,
    is_efficient_dominating_set, Engine, ParamBundle, ENUMERATION_CAP,
};
use crate::theorem::TheoremId;

/// Largest tree order a sweep accepts.
pub const MAX_SWEEP_TREE_ORDER: usize = 12;
/// Largest order of a random sweep graph.
pub const MAX_RANDOM_ORDER: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Labeling(Labeling),
    Vertices(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub theorem: TheoremId,
    pub applicable: bool,
    /// Meaningful only when `applicable`.
    pub holds: bool,
    /// Whether the extremal case occurs, for results that have one.
    pub equality: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub detail: String,
}

impl CheckOutcome {
    fn skip(theorem: TheoremId, why: impl Into<String>) -> Self {
        CheckOutcome {
            theorem,
            applicable: false,
            holds: true,
            equality: None,
            witness: None,
            detail: why.into(),
        }
    }

    fn verdict(theorem: TheoremId, holds: bool, equality: Option<bool>, detail: String) -> Self {
        CheckOutcome {
            theorem,
            applicable: true,
            holds,
            equality,
            witness: None,
            detail,
        }
    }

    fn with_witness(mut self, w: Option<Witness>) -> Self {
        self.witness = w;
        self
    }

    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }

    /// Short verdict used in CSV cells.
    pub fn cell(&self) -> &'static str {
        match (self.applicable, self.holds, self.equality) {
            (false, _, _) => "na",
            (true, false, _) => "FAIL",
            (true, true, Some(true)) => "eq",
            (true, true, _) => "ok",
        }
    }
}

fn half_up(x: usize) -> u32 {
    x.div_ceil(2) as u32
}

/// `n − Δ + α′·⌈(Δ−1)/2⌉`.
pub fn matching_bound(g: &Graph) -> u32 {
    let d = g.max_degree();
    (g.order() - d) as u32 + matching_number(g) as u32 * half_up(d.saturating_sub(1))
}

fn all_components(g: &Graph, pred: impl Fn(&Graph) -> bool) -> bool {
    g.components()
        .iter()
        .all(|c| pred(&g.induced_subgraph(c).expect("component vertices are valid")))
}

fn is_matching_graph(g: &Graph) -> bool {
    g.degrees().iter().all(|&d| d == 1)
}

fn iff(
    t: TheoremId,
    value_side: bool,
    class_side: bool,
    what: &str,
    class: &str,
) -> CheckOutcome {
    CheckOutcome::verdict(
        t,
        value_side == class_side,
        Some(value_side),
        format!("{what}: {value_side}; {class}: {class_side}"),
    )
}

fn upper(t: TheoremId, value: u32, bound: u32, name: &str) -> CheckOutcome {
    CheckOutcome::verdict(
        t,
        value <= bound,
        Some(value == bound),
        format!("{name} = {value} <= {bound}"),
    )
}

fn lower(t: TheoremId, value: u32, bound: u32, name: &str) -> CheckOutcome {
    CheckOutcome::verdict(
        t,
        value >= bound,
        Some(value == bound),
        format!("{name} = {value} >= {bound}"),
    )
}

/// Evaluates one result on `g`. `bundle` must hold the parameters of `g`.
/// Results that need every optimal function are skipped above
/// [`ENUMERATION_CAP`].
pub fn check(g: &Graph, t: TheoremId, bundle: &ParamBundle) -> CheckOutcome {
    use TheoremId::*;
    let n = g.order();
    let n32 = n as u32;
    let d_max = g.max_degree();
    let d_min = g.min_degree();
    let connected = g.is_connected();
    let isolated_free = !g.has_isolated_vertex();
    let b = bundle;
    // total parameters exist exactly on isolated-free graphs
    let tstr = b.gamma_tstrd.unwrap_or(0);
    let gt = b.gamma_t.unwrap_or(0);
    let tr = b.gamma_tr.unwrap_or(0);

    match t {
        Obs1 => {
            if !isolated_free {
                return CheckOutcome::skip(t, "has an isolated vertex");
            }
            let top = (d_max as u32 + 1).div_ceil(2) * gt;
            CheckOutcome::verdict(
                t,
                tr <= tstr && tstr <= top,
                Some(tstr == top),
                format!("{tr} <= {tstr} <= {top}"),
            )
        }
        ObsO2 => {
            if n < 3 || !isolated_free {
                return CheckOutcome::skip(t, "needs n >= 3 and no isolated vertex");
            }
            CheckOutcome::verdict(
                t,
                (3..=n32).contains(&tstr),
                Some(tstr == n32),
                format!("3 <= {tstr} <= {n}"),
            )
        }
        ObsAb => {
            if !connected || n < 3 {
                return CheckOutcome::skip(t, "needs connected, n >= 3");
            }
            if n > ENUMERATION_CAP {
                return CheckOutcome::skip(t, "order exceeds enumeration cap");
            }
            check_obs_ab(g).expect("preconditions checked")
        }
        New1 => {
            if !connected || d_max > 2 {
                return CheckOutcome::skip(t, "needs connected, max degree <= 2");
            }
            let (s, r) = (b.gamma_strd, b.gamma_r);
            CheckOutcome::verdict(t, s == r, None, format!("gamma_str = {s}, gamma_r = {r}"))
        }
        ObsO3 => {
            if !connected || n < 2 || d_max > 3 {
                return CheckOutcome::skip(t, "needs connected, n >= 2, max degree <= 3");
            }
            CheckOutcome::verdict(t, tstr == tr, None, format!("gamma_tstr = {tstr}, gamma_tr = {tr}"))
        }
        PathR => {
            if !(is_path(g) || is_cycle(g)) {
                return CheckOutcome::skip(t, "not a path or cycle");
            }
            let want = (2 * n).div_ceil(3) as u32;
            CheckOutcome::verdict(t, b.gamma_r == want, None, format!("gamma_r = {} vs {want}", b.gamma_r))
        }
        PathTr => {
            if !((is_path(g) && n >= 2) || is_cycle(g)) {
                return CheckOutcome::skip(t, "not a nontrivial path or cycle");
            }
            CheckOutcome::verdict(t, tr == n32, None, format!("gamma_tr = {tr} vs {n}"))
        }
        AhEqNTr => {
            if !connected || n < 2 {
                return CheckOutcome::skip(t, "needs connected, n >= 2");
            }
            let member = recognize_equality_class(g, EqualityClass::ThnList);
            iff(t, tr == n32, member, "gamma_tr = n", "listed class")
        }
        Th4 => {
            if !isolated_free {
                return CheckOutcome::skip(t, "has an isolated vertex");
            }
            iff(t, gt == tr, is_matching_graph(g), "gamma_t = gamma_tr", "union of K2")
        }
        Th5 => {
            if !connected || n < 3 {
                return CheckOutcome::skip(t, "needs connected, n >= 3");
            }
            iff(t, tr == gt + 1, d_max == n - 1, "gamma_tr = gamma_t + 1", "dominating vertex")
        }
        Th6 => {
            if !isolated_free {
                return CheckOutcome::skip(t, "has an isolated vertex");
            }
            let bound_ok = 2 * b.gamma <= n32;
            let eq = 2 * b.gamma == n32;
            let class = all_components(g, |c| is_corona(c) || (c.order() == 4 && is_cycle(c)));
            CheckOutcome::verdict(
                t,
                bound_ok && eq == class,
                Some(eq),
                format!("2*gamma = {} <= {n}; C4/corona components: {class}", 2 * b.gamma),
            )
        }
        ThmS => {
            if !isolated_free || n < 4 || g.is_star() {
                return CheckOutcome::skip(t, "needs no isolated vertex, n >= 4, not a star");
            }
            upper(t, tstr, matching_bound(g), "gamma_tstr")
        }
        ThmGirthEq => {
            if !connected || n < 2 || girth(g).finite().is_some_and(|x| x < 4) {
                return CheckOutcome::skip(t, "needs connected, n >= 2, girth >= 4");
            }
            let bound = matching_bound(g);
            let member = recognize_equality_class(g, EqualityClass::GirthList);
            let mut o = iff(t, tstr == bound, member, "gamma_tstr = matching bound", "listed graph");
            let _ = write!(o.detail, " ({tstr} vs {bound})");
            o
        }
        PropMindeg => {
            if !connected || n < 2 {
                return CheckOutcome::skip(t, "needs connected, n >= 2");
            }
            upper(t, tstr, (n - (d_min - 1) / 2) as u32, "gamma_tstr")
        }
        PropDiam2 => {
            if diameter(g) != Extent::Finite(2) {
                return CheckOutcome::skip(t, "diameter is not 2");
            }
            upper(t, tstr, d_min as u32 * (1 + half_up(d_max - 1)) + 1, "gamma_tstr")
        }
        PropDiampath => {
            if !connected || d_min < 3 {
                return CheckOutcome::skip(t, "needs connected, min degree >= 3");
            }
            let diam = diameter(g).finite().expect("connected");
            upper(t, tstr, (n - (diam + 1) / 3) as u32, "gamma_tstr")
        }
        PropGirth => {
            let gi = match girth(g) {
                Extent::Finite(x) if x >= 4 && connected && d_min >= 3 => x,
                _ => return CheckOutcome::skip(t, "needs connected, finite girth >= 4, min degree >= 3"),
            };
            upper(t, tstr, (n - gi / 3) as u32, "gamma_tstr")
        }
        ThmTstrdEqN => {
            if !connected || n < 2 {
                return CheckOutcome::skip(t, "needs connected, n >= 2");
            }
            let member = recognize_equality_class(g, EqualityClass::ThnList);
            iff(t, tstr == n32, member, "gamma_tstr = n", "listed class")
        }
        PropNg => {
            let comp = g.complement();
            if n < 4 || !connected || !comp.is_connected() {
                return CheckOutcome::skip(t, "needs n >= 4 with graph and complement connected");
            }
            let other = gamma_tstrd(&comp, Engine::BranchBound).expect("connected complement");
            let sum = tstr + other;
            let eq = sum == 2 * n32;
            let p4 = is_isomorphic(g, &Graph::path(4).unwrap());
            CheckOutcome::verdict(
                t,
                (8..=2 * n32).contains(&sum) && eq == p4,
                Some(eq),
                format!("8 <= {tstr} + {other} = {sum} <= {}; P4: {p4}", 2 * n),
            )
        }
        Thm2Strd => {
            if n < 4 || !isolated_free {
                return CheckOutcome::skip(t, "needs n >= 4, no isolated vertex");
            }
            upper(t, tstr, 2 * (b.gamma_strd - 1), "gamma_tstr")
        }
        PropEqGt => {
            if !isolated_free {
                return CheckOutcome::skip(t, "has an isolated vertex");
            }
            iff(t, tstr == gt, is_matching_graph(g), "gamma_tstr = gamma_t", "union of K2")
        }
        PropGtPlus1 => {
            if !connected || n < 3 {
                return CheckOutcome::skip(t, "needs connected, n >= 3");
            }
            // connected graphs on three vertices are exactly P3 and C3
            iff(t, tstr == gt + 1, n == 3, "gamma_tstr = gamma_t + 1", "P3 or C3")
        }
        PropCeilGt => {
            if !isolated_free || d_max <= 1 {
                return CheckOutcome::skip(t, "needs no isolated vertex, max degree > 1");
            }
            if n > ENUMERATION_CAP {
                return CheckOutcome::skip(t, "order exceeds enumeration cap");
            }
            check_ceil_gt_characterization(g).expect("preconditions checked")
        }
        ThmThree => {
            if !isolated_free {
                return CheckOutcome::skip(t, "has an isolated vertex");
            }
            check_thm_three_consequence(g).expect("preconditions checked")
        }
        Prop3n2 => {
            if !connected || !isolated_free {
                return CheckOutcome::skip(t, "needs connected, no isolated vertex");
            }
            let lhs = 2 * (b.gamma + tstr);
            let eq = lhs == 3 * n32;
            let class = is_corona(g) || (n == 4 && is_cycle(g));
            CheckOutcome::verdict(
                t,
                lhs <= 3 * n32 && eq == class,
                Some(eq),
                format!("2(gamma + gamma_tstr) = {lhs} <= {}; C4 or corona: {class}", 3 * n),
            )
        }
        LemLeavesZero => {
            if !g.is_tree() || g.is_star() || n < 2 {
                return CheckOutcome::skip(t, "needs a tree that is not a star");
            }
            if n > ENUMERATION_CAP {
                return CheckOutcome::skip(t, "order exceeds enumeration cap");
            }
            check_leaves_zero(g).expect("preconditions checked")
        }
        ThmTreeGt => {
            if !g.is_tree() || n < 2 {
                return CheckOutcome::skip(t, "needs a nontrivial tree");
            }
            lower(t, tstr, gt + half_up(d_max - 1), "gamma_tstr")
        }
        ThmTreeNs => {
            if !g.is_tree() || n < 3 {
                return CheckOutcome::skip(t, "needs a tree with n >= 3");
            }
            let s = g.support_vertices().len();
            lower(t, tstr, (n + s).div_ceil(d_max) as u32 + 1, "gamma_tstr")
        }
    }
}

/// Every optimal function: `|B2| <= |B0|`, no leaf in `B2`, no support
/// vertex in `B0`. The first offending function is the witness.
pub fn check_obs_ab(g: &Graph) -> Result<CheckOutcome> {
    let t = TheoremId::ObsAb;
    if !g.is_connected() || g.order() < 3 {
        return Ok(CheckOutcome::skip(t, "needs connected, n >= 3"));
    }
    let set = enumerate_optimal_tstrd(g)?;
    let leaves = g.leaves();
    let supports = g.support_vertices();
    let bad = set.functions.iter().find_map(|f| {
        if f.b2().len() > f.b0().len() {
            Some((f, "|B2| > |B0|"))
        } else if leaves.iter().any(|&x| f.get(x) >= 2) {
            Some((f, "leaf in B2"))
        } else if supports.iter().any(|&y| f.get(y) == 0) {
            Some((f, "support vertex in B0"))
        } else {
            None
        }
    });
    let count = set.functions.len();
    Ok(match bad {
        None => CheckOutcome::verdict(t, true, None, format!("{count} optimal functions checked")),
        Some((f, why)) => CheckOutcome::verdict(t, false, None, format!("{why} in an optimal function"))
            .with_witness(Some(Witness::Labeling(f.clone()))),
    })
}

/// Some optimal function labels every leaf 0.
pub fn check_leaves_zero(g: &Graph) -> Result<CheckOutcome> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if g.is_star() {
        return Err(Error::StarInput);
    }
    let set = enumerate_optimal_tstrd(g)?;
    let leaves = g.leaves();
    let found = set
        .functions
        .iter()
        .find(|f| leaves.iter().all(|&x| f.get(x) == 0));
    Ok(match found {
        Some(f) => CheckOutcome::verdict(TheoremId::LemLeavesZero, true, None, "leaf-free optimal function found".into())
            .with_witness(Some(Witness::Labeling(f.clone()))),
        None => CheckOutcome::verdict(
            TheoremId::LemLeavesZero,
            false,
            None,
            format!("none of {} optimal functions avoids the leaves", set.functions.len()),
        ),
    })
}

/// `γᵗ_StR = ⌈(Δ+1)/2⌉γ_t` exactly when some optimal function has
/// `B1 = ∅` and every `w ∈ B2` sees exactly `Δ−1` zeros.
pub fn check_ceil_gt_characterization(g: &Graph) -> Result<CheckOutcome> {
    let t = TheoremId::PropCeilGt;
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertexInGraph);
    }
    let d = g.max_degree();
    if d <= 1 {
        return Ok(CheckOutcome::skip(t, "needs max degree > 1"));
    }
    let set = enumerate_optimal_tstrd(g)?;
    let gt = crate::solvers::gamma_t(g)?;
    let target = (d as u32 + 1).div_ceil(2) * gt;
    let eq = set.weight == target;
    let qualifying = set.functions.iter().find(|f| {
        f.b1().is_empty()
            && f.b2().iter().all(|&w| {
                g.neighbors(w).filter(|&x| f.get(x) == 0).count() == d - 1
            })
    });
    let exists = qualifying.is_some();
    Ok(CheckOutcome::verdict(
        t,
        eq == exists,
        Some(eq),
        format!("gamma_tstr = {} vs {target}; qualifying function: {exists}", set.weight),
    )
    .with_witness(qualifying.cloned().map(Witness::Labeling)))
}

/// The domination bound `(⌈(Δ−1)/2⌉+2)γ`, and on equality every minimum
/// dominating set is efficient with all members of degree `Δ`.
pub fn check_thm_three_consequence(g: &Graph) -> Result<CheckOutcome> {
    let t = TheoremId::ThmThree;
    let tstr = gamma_tstrd(g, Engine::BranchBound)?;
    let d = g.max_degree();
    let sets = all_min_dominating_sets(g);
    let bound = (half_up(d.saturating_sub(1)) + 2) * sets[0].len() as u32;
    let eq = tstr == bound;
    let offending = if eq {
        sets.iter()
            .find(|s| !is_efficient_dominating_set(g, s) || s.iter().any(|&v| g.degree(v) != d))
            .cloned()
    } else {
        None
    };
    Ok(CheckOutcome::verdict(
        t,
        tstr <= bound && offending.is_none(),
        Some(eq),
        format!(
            "gamma_tstr = {tstr} <= {bound}; {} minimum dominating sets{}",
            sets.len(),
            if offending.is_some() { "; one is inefficient or has a member of degree below max" } else { "" }
        ),
    )
    .with_witness(offending.map(Witness::Vertices)))
}

#[derive(Clone, Debug, PartialEq)]
pub enum CorpusKind {
    AllConnected(usize),
    AllTrees(usize),
    Random { count: usize, n: usize, p: f64, seed: u64 },
    Explicit(Vec<Graph>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Corpus {
    pub kind: CorpusKind,
    /// Drop isomorphic repeats (generated corpora are already free of them).
    pub dedup: bool,
}

impl Corpus {
    pub fn new(kind: CorpusKind) -> Self {
        Corpus { kind, dedup: true }
    }

    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let too_large = |order, cap| Err(Error::InstanceTooLarge { order, cap });
        let graphs = match &self.kind {
            CorpusKind::AllConnected(n) if *n > MAX_GENERAL_ORDER => return too_large(*n, MAX_GENERAL_ORDER),
            CorpusKind::AllTrees(n) if *n > MAX_SWEEP_TREE_ORDER => return too_large(*n, MAX_SWEEP_TREE_ORDER),
            CorpusKind::Random { n, .. } if *n > MAX_RANDOM_ORDER => return too_large(*n, MAX_RANDOM_ORDER),
            CorpusKind::AllConnected(n) => return Ok(connected_graphs_up_to(*n)),
            CorpusKind::AllTrees(n) => return Ok(trees_up_to(*n)),
            CorpusKind::Random { count, n, p, seed } => random_graphs(*count, *n, *p, *seed),
            CorpusKind::Explicit(list) => list.clone(),
        };
        if !self.dedup {
            return Ok(graphs);
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(graphs.len());
        for g in graphs {
            let fresh = if g.order() <= CANON_MAX_ORDER {
                seen.insert(canonical_code(&g))
            } else {
                !out.iter().any(|h| is_isomorphic(&g, h))
            };
            if fresh {
                out.push(g);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub girth: Extent,
    pub diameter: Extent,
    pub params: ParamBundle,
    pub outcomes: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub theorem: Option<TheoremId>,
    pub applicable: usize,
    pub holds: usize,
    pub equality: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportViolation {
    pub graph6: String,
    pub outcome: CheckOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub graphs: usize,
    pub theorems: Vec<TheoremId>,
    pub summary: Vec<TheoremSummary>,
    pub violations: Vec<ReportViolation>,
    #[serde(skip)]
    pub records: Vec<GraphRecord>,
}

impl Report {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }

    pub fn summary_for(&self, t: TheoremId) -> Option<&TheoremSummary> {
        self.summary.iter().find(|s| s.theorem == Some(t))
    }

    /// One row per graph; the verdict columns follow `theorems` order.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = [
            "graph6", "n", "m", "max_degree", "min_degree", "girth", "diam", "gamma", "gamma_t",
            "gamma_r", "gamma_tr", "gamma_str", "gamma_tstr",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        header.extend(self.theorems.iter().map(|t| t.name().to_string()));
        let csv_err = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(&header).map_err(csv_err)?;
        let opt = |v: Option<u32>| v.map_or_else(|| "infeasible".to_string(), |x| x.to_string());
        for r in &self.records {
            let mut row = vec![
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.max_degree.to_string(),
                r.min_degree.to_string(),
                r.girth.to_string(),
                r.diameter.to_string(),
                r.params.gamma.to_string(),
                opt(r.params.gamma_t),
                r.params.gamma_r.to_string(),
                opt(r.params.gamma_tr),
                r.params.gamma_strd.to_string(),
                opt(r.params.gamma_tstrd),
            ];
            row.extend(r.outcomes.iter().map(|o| o.cell().to_string()));
            w.write_record(&row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn record_for(g: &Graph, theorems: &[TheoremId]) -> GraphRecord {
    let params = compute_bundle(g);
    GraphRecord {
        graph6: emit_graph6(g).unwrap_or_default(),
        n: g.order(),
        m: g.size(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        girth: girth(g),
        diameter: diameter(g),
        params,
        outcomes: theorems.iter().map(|&t| check(g, t, &params)).collect(),
    }
}

/// Runs every requested check on every corpus graph. Graphs are processed
/// in parallel on the current rayon pool; the report lists them in corpus
/// order regardless of the number of workers.
pub fn sweep(corpus: &Corpus, theorems: &[TheoremId]) -> Result<Report> {
    let graphs = corpus.graphs()?;
    let records: Vec<GraphRecord> = graphs.par_iter().map(|g| record_for(g, theorems)).collect();
    let mut summary: Vec<TheoremSummary> = theorems
        .iter()
        .map(|&t| TheoremSummary {
            theorem: Some(t),
            ..Default::default()
        })
        .collect();
    let mut violations = Vec::new();
    for r in &records {
        for (s, o) in summary.iter_mut().zip(&r.outcomes) {
            if !o.applicable {
                continue;
            }
            s.applicable += 1;
            if o.holds {
                s.holds += 1;
            } else {
                s.violations += 1;
                violations.push(ReportViolation {
                    graph6: r.graph6.clone(),
                    outcome: o.clone(),
                });
            }
            if o.equality == Some(true) {
                s.equality += 1;
            }
        }
    }
    Ok(Report {
        graphs: records.len(),
        theorems: theorems.to_vec(),
        summary,
        violations,
        records,
    })
}
