//! Dominating sets, k-dominating reconfiguration graphs and exact counting.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] builds simple graphs (paths, cycles, complete and empty graphs)
//!   and the join, corona and Cartesian products.
//! * [`domination`] decides and enumerates dominating sets. It is the
//!   exhaustive oracle every formula in [`counting`] is checked against.
//! * [`reconfig`] builds `D_k(G)`, the graph on dominating sets of size at
//!   most `k` where two sets are adjacent when they differ by one vertex.
//! * [`counting`] holds the recurrences, generating functions, closed forms
//!   and product-order formulas, computed without enumeration.
//! * [`verify`] cross-checks the two sides and produces a structured report.
//! * [`export`] and [`cli`] handle the file formats and the command line.

pub mod cli;
pub mod counting;
pub mod domination;
pub mod error;
pub mod export;
pub mod graph;
pub mod reconfig;
pub mod subset;
pub mod verify;

pub use domination::{DomFamily, Enumerator};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use reconfig::ReconfigGraph;
pub use subset::VertexSubset;
