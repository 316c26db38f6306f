//! Named graph families and their closed-form parameter values.
//!
//! Vertex numbering per family:
//!
//! * `Path(n)`: `0-1-...-(n-1)`; `Cycle(n)` adds `(n-1)-0`.
//! * `Star(n)`: `K_{1,n-1}`, centre `0`, leaves `1..n`.
//! * `DoubleStar(p, q)`: centres `0` (with `p` leaves) and `1` (with `q`
//!   leaves); leaves of `0` are `2..2+p`, leaves of `1` follow.
//! * `Corona(F)`: vertices of `F` keep their ids, the pendant of `v` is
//!   `|F| + v`.
//! * `SubdividedStar(k)`: centre `0`, subdivision vertices `1..=k`, leaf of
//!   branch `i` is `k + i`.
//! * `FamilyG(k1, k2)`: 4-cycle `0-1-2-3-0`; pendant paths `a-b` follow in
//!   pairs, the first `k1` with `a` joined to `0`, the rest to `1`.
//! * `FamilyH(p, q, r)`: centres `0` and `1` joined through `r` inner
//!   vertices `2..2+r`; then `p` branches `m-l` on `0`, then `q` on `1`.
//! * Fixed graphs `F1..F5` number their drawn vertices `a..f` as `0..5`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::profile::{girth, Extent};
use crate::solvers::Param;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedGraph {
    F1,
    F2,
    F3,
    F4,
    F5,
    /// `S(K_{1,3})`.
    SK13,
}

impl FixedGraph {
    pub const ALL: [FixedGraph; 6] = [
        FixedGraph::F1,
        FixedGraph::F2,
        FixedGraph::F3,
        FixedGraph::F4,
        FixedGraph::F5,
        FixedGraph::SK13,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixedGraph::F1 => "F1",
            FixedGraph::F2 => "F2",
            FixedGraph::F3 => "F3",
            FixedGraph::F4 => "F4",
            FixedGraph::F5 => "F5",
            FixedGraph::SK13 => "SK13",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    DoubleStar(usize, usize),
    Corona(Box<FamilySpec>),
    SubdividedStar(usize),
    FamilyG(usize, usize),
    FamilyH(usize, usize, usize),
    Fixed(FixedGraph),
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;

/// The graphs drawn in the girth-equality figure, plus `S(K_{1,3})`.
pub fn fixed_graph(id: FixedGraph) -> Graph {
    let (n, edges): (usize, &[(usize, usize)]) = match id {
        // DS_{1,2} with its central edge subdivided once
        FixedGraph::F1 => (6, &[(A, B), (B, C), (A, D), (A, E), (C, F)]),
        // 4-cycle a-b-c-e with pendants d on a and f on c
        FixedGraph::F2 => (6, &[(A, B), (B, C), (C, E), (E, A), (A, D), (C, F)]),
        FixedGraph::F3 => (6, &[(A, B), (B, C), (A, D), (A, E), (C, D), (C, E), (C, F)]),
        // 4-cycle a-b-d-c with a pendant e on a
        FixedGraph::F4 => (5, &[(A, B), (B, D), (D, C), (C, A), (A, E)]),
        // two 4-cycles sharing a path of length 2, i.e. K_{2,3}
        FixedGraph::F5 => (5, &[(A, B), (B, C), (A, D), (A, E), (C, D), (C, E)]),
        FixedGraph::SK13 => return subdivided_star(3),
    };
    let g = Graph::new(n, edges).expect("fixed edge lists are valid");
    debug_assert!(match id {
        FixedGraph::F1 => girth(&g) == Extent::Unbounded && g.max_degree() == 3,
        FixedGraph::F2 | FixedGraph::F3 | FixedGraph::F4 | FixedGraph::F5 =>
            girth(&g) == Extent::Finite(4),
        FixedGraph::SK13 => true,
    });
    g
}

fn subdivided_star(k: usize) -> Graph {
    let mut edges = Vec::with_capacity(2 * k);
    for i in 1..=k {
        edges.push((0, i));
        edges.push((i, k + i));
    }
    Graph::new(2 * k + 1, &edges).expect("valid subdivided star")
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamilyParams(msg.into())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path(n) if n < 1 => Err(invalid("path needs n >= 1")),
            FamilySpec::Cycle(n) if n < 3 => Err(invalid("cycle needs n >= 3")),
            FamilySpec::Star(n) if n < 2 => Err(invalid("star needs n >= 2")),
            FamilySpec::DoubleStar(p, q) | FamilySpec::FamilyH(p, q, _) if !(p >= q && q >= 1) => {
                Err(invalid("double star needs p >= q >= 1"))
            }
            FamilySpec::SubdividedStar(k) if k < 1 => Err(invalid("subdivided star needs k >= 1")),
            FamilySpec::FamilyG(k1, k2) if k1 + k2 < 1 => Err(invalid("family G needs k1 + k2 >= 1")),
            FamilySpec::Corona(ref base) => base.validate(),
            _ => Ok(()),
        }
    }

    pub fn realize(&self) -> Result<Graph> {
        self.validate()?;
        let g = match *self {
            FamilySpec::Path(n) => Graph::path(n)?,
            FamilySpec::Cycle(n) => Graph::cycle(n)?,
            FamilySpec::Star(n) => Graph::complete_bipartite(1, n - 1)?,
            FamilySpec::DoubleStar(p, q) => {
                let mut edges = vec![(0, 1)];
                edges.extend((0..p).map(|i| (0, 2 + i)));
                edges.extend((0..q).map(|i| (1, 2 + p + i)));
                Graph::new(2 + p + q, &edges)?
            }
            FamilySpec::Corona(ref base) => corona(&base.realize()?)?,
            FamilySpec::SubdividedStar(k) => subdivided_star(k),
            FamilySpec::FamilyG(k1, k2) => {
                let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
                for j in 0..k1 + k2 {
                    let a = 4 + 2 * j;
                    edges.push((if j < k1 { 0 } else { 1 }, a));
                    edges.push((a, a + 1));
                }
                Graph::new(4 + 2 * (k1 + k2), &edges)?
            }
            FamilySpec::FamilyH(p, q, r) => {
                let mut edges = Vec::new();
                let mut prev = 0;
                for i in 0..r {
                    edges.push((prev, 2 + i));
                    prev = 2 + i;
                }
                edges.push((prev, 1));
                let mut next = 2 + r;
                for (centre, count) in [(0, p), (1, q)] {
                    for _ in 0..count {
                        edges.push((centre, next));
                        edges.push((next, next + 1));
                        next += 2;
                    }
                }
                Graph::new(next, &edges)?
            }
            FamilySpec::Fixed(id) => fixed_graph(id),
        };
        Ok(g)
    }

    /// Closed-form value of `param` on this family, where one is known.
    pub fn closed_form(&self, param: Param) -> Result<u32> {
        self.validate()?;
        let no = || Error::NoClosedForm(format!("{param} on {self}"));
        let ceil_div = |a: usize, b: usize| a.div_ceil(b) as u32;
        match (self, param) {
            (FamilySpec::Path(n) | FamilySpec::Cycle(n), Param::GammaR | Param::GammaStR) => {
                Ok(ceil_div(2 * n, 3))
            }
            (FamilySpec::Path(n) | FamilySpec::Cycle(n), Param::GammaTR | Param::GammaTStR)
                if *n >= 2 =>
            {
                Ok(*n as u32)
            }
            (FamilySpec::Star(n), Param::GammaTStR) => Ok(ceil_div(n + 2, 2)),
            (FamilySpec::DoubleStar(p, q), Param::GammaTStR) => {
                let (small, large) = ((*p).min(*q), (*p).max(*q));
                Ok(match (small, large) {
                    (1, 1) => 4,
                    (1, l) => ceil_div(l, 2) + 3,
                    (s, l) => ceil_div(s, 2) + ceil_div(l, 2) + 2,
                })
            }
            (
                FamilySpec::Corona(_)
                | FamilySpec::SubdividedStar(_)
                | FamilySpec::FamilyG(..)
                | FamilySpec::FamilyH(..),
                Param::GammaTR | Param::GammaTStR,
            ) => Ok(self.realize()?.order() as u32),
            (FamilySpec::Corona(_), Param::Gamma) => Ok(self.realize()?.order() as u32 / 2),
            _ => Err(no()),
        }
    }
}

/// `F ∘ K_1`: one new pendant leaf per vertex of `base`.
pub fn corona(base: &Graph) -> Result<Graph> {
    let k = base.order();
    let mut edges = base.edges().to_vec();
    edges.extend((0..k).map(|v| (v, k + v)));
    Ok(Graph::new(2 * k, &edges)?)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::DoubleStar(p, q) => write!(f, "dstar:{p},{q}"),
            FamilySpec::Corona(base) => write!(f, "corona:{base}"),
            FamilySpec::SubdividedStar(k) => write!(f, "sstar:{k}"),
            FamilySpec::FamilyG(a, b) => write!(f, "famG:{a},{b}"),
            FamilySpec::FamilyH(p, q, r) => write!(f, "famH:{p},{q},{r}"),
            FamilySpec::Fixed(id) => write!(f, "fixed:{}", id.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Textual forms: `path:6`, `cycle:5`, `star:6`, `dstar:2,2`,
    /// `corona:<spec>`, `sstar:3`, `famG:1,0`, `famH:2,2,1`, `fixed:F3`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family spec `{s}` lacks `kind:args`")))?;
        if kind == "corona" {
            return Ok(FamilySpec::Corona(Box::new(args.parse()?)));
        }
        if kind == "fixed" {
            return FixedGraph::ALL
                .into_iter()
                .find(|f| f.name().eq_ignore_ascii_case(args))
                .map(FamilySpec::Fixed)
                .ok_or_else(|| Error::Parse(format!("unknown fixed graph `{args}`")));
        }
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| {
                a.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number `{a}` in `{s}`")))
            })
            .collect::<Result<_>>()?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!("`{kind}` takes {k} argument(s)")))
            }
        };
        let spec = match kind {
            "path" => arity(1).map(|_| FamilySpec::Path(nums[0])),
            "cycle" => arity(1).map(|_| FamilySpec::Cycle(nums[0])),
            "star" => arity(1).map(|_| FamilySpec::Star(nums[0])),
            "dstar" => arity(2).map(|_| FamilySpec::DoubleStar(nums[0], nums[1])),
            "sstar" => arity(1).map(|_| FamilySpec::SubdividedStar(nums[0])),
            "famG" => arity(2).map(|_| FamilySpec::FamilyG(nums[0], nums[1])),
            "famH" => arity(3).map(|_| FamilySpec::FamilyH(nums[0], nums[1], nums[2])),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }?;
        Ok(spec)
    }
}
