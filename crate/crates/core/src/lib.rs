//! Exact arithmetic for triangle packings in balanced tripartite graphs:
//! density thresholds, extremal constructions, and exact solvers with
//! certificates.

pub mod codec;
pub mod constructions;
pub mod graph;
pub mod rat;
pub mod solvers;
pub mod thresholds;
