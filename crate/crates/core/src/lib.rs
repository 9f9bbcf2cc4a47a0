//! Connectivity queries on undirected graphs under vertex failures.
//!
//! Preprocess a graph once for a failure budget `d*`; afterwards, for any set
//! `F` of at most `d*` failed vertices, derive a lightweight per-`F` oracle
//! that answers "are `x` and `y` connected in `G \ F`?" in time linear in
//! `|F|`. The construction is built from a DFS tree, multi-level low points,
//! a constant-time level-ancestor index, and static 2D range-emptiness
//! structures over the back-edges.
//!
//! Entry points:
//! - [`graph::load_graph`] / [`graph::normalize`] / [`graph::split_components`]
//!   for ingestion,
//! - [`oracle::ConnectivityIndex`] for the user-facing build/resize/update/query
//!   cycle (original vertex ids),
//! - [`brute`] for the independent reference oracles used by the test and
//!   verification harnesses.

pub mod brute;
pub mod dfs;
pub mod error;
pub mod gen;
pub mod graph;
pub mod la;
pub mod oracle;
pub mod range2d;

pub use error::Error;
pub use graph::{Graph, RawGraph};
// pub use oracle::{ConnectivityIndex, FailureOracle};

/// Sentinel for "no vertex" in parent-style pointers (vertices are 1-based).
pub const NO_VERTEX: u32 = 0;

/// Sentinel for an absent low point; sorts after every real vertex id.
pub const LOW_ABSENT: u32 = u32::MAX;
