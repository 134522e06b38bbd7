//! Solvers for the graph sandwich problem when the target class is defined by
//! forbidding one or two induced subgraphs of order four.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod graph;
pub mod hardness;
pub mod poly;
pub mod quartet;
pub mod tooling;

pub use error::{Error, Result};
pub use graph::{verify_sandwich, Graph, SandwichInstance, Verdict};
pub use quartet::{find_induced, ForbiddenFamily, Pattern, Quartet, Triplet};
