//! Exact computation and verification workbench for the total strong Roman
//! domination number and five related domination parameters.

pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod profile;
pub mod recognize;
pub mod solvers;
pub mod theorem;
pub mod verify;

pub use error::{Error, GraphError, Result};
pub use graph::Graph;
pub use labeling::{Labeling, Verdict, Violation};
pub use solvers::{Engine, FunctionClass, Param, ParamBundle};
pub use theorem::TheoremId;
