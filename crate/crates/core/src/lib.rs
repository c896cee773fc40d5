//! Workbench for generalized Turán problems.
//!
//! Builds the apex-plus-Turán extremal constructions `K_{s-1} + T(n-s+1, r)`
//! and their bipartite and star-forbidding relatives, computes the chromatic
//! parameters they are built from, counts subgraph copies exactly, and checks
//! the constructions against brute-force optima at small orders.

pub mod bitset;
pub mod canon;
pub mod chromatic;
pub mod construct;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod report;
pub mod search;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::Graph;
