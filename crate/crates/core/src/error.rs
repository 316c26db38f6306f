use thiserror::Error;

use crate::theorem::TheoremId;

/// Errors raised while building a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("labeling has {labels} entries but the graph has {order} vertices")]
    SizeMismatch { labels: usize, order: usize },
    #[error("graph has an isolated vertex; total variants are undefined")]
    IsolatedVertexInGraph,
    #[error("instance of order {order} exceeds the cap of {cap}")]
    InstanceTooLarge { order: usize, cap: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("no closed form known for {0}")]
    NoClosedForm(String),
    #[error("input is a star")]
    StarInput,
    #[error("input too small: order {order}, need at least {min}")]
    TooSmall { order: usize, min: usize },
    #[error("input must be connected")]
    Disconnected,
    #[error("diameter must be 2")]
    WrongDiameter,
    #[error("minimum degree {actual} is below the required {required}")]
    MinDegreeTooSmall { actual: usize, required: usize },
    #[error("input is acyclic")]
    AcyclicInput,
    #[error("girth {0} is below 4")]
    GirthTooSmall(usize),
    #[error("vertex set is not a dominating set")]
    NotDominatingSet,
    #[error("vertex set is not a total dominating set")]
    NotTotalDominatingSet,
    #[error("input is not a tree")]
    NotATree,
    #[error("certificate for {theorem} failed: weight {weight}, bound {bound}, valid {valid}")]
    CertificateFailed {
        theorem: TheoremId,
        weight: u32,
        bound: u32,
        valid: bool,
    },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
