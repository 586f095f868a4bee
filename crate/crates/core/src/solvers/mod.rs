//! Exact combinatorial engines: triangle packing by branch and bound,
//! early-exit k-packing, bipartite matching with a König cover, the two
//! constructive factor routes plus the exact factor decision, the
//! triangle-isolating deletion set, and exact matching numbers for small
//! tripartite 3-uniform hypergraphs.
//!
//! Every solver call is single-threaded and deterministic; concurrent calls
//! on shared immutable graphs are safe.

mod factor;
mod isolation;
mod matching;
mod packing;

pub use factor::{factor_from_matchings, factor_via_hall, triangle_factor_exact, FactorResult, FactorStatus};
pub use isolation::{lemma24_deletion_set, triangle_edges, IsolationError};
pub use matching::{max_bipartite_matching_with_cover, BlockSide, MatchingWithCover};
pub use packing::{
    find_k_disjoint, hypergraph_max_matching, max_triangle_packing, HypergraphMatching,
    KPackingOutcome, PackingResult,
};

use crate::graph::PairTag;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("operation requires a balanced graph, got part sizes {sizes:?}")]
    Unbalanced { sizes: [usize; 3] },
    #[error("the {pair:?} block must be complete for this route")]
    PairNotComplete { pair: PairTag },
}

/// Search limits. Node cap counts every branch-and-bound call; the optional
/// wall-clock cap is checked on entry to each node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    max_nodes: u64,
    max_millis: Option<u64>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        assert!(max_nodes >= 1, "node budget must be positive");
        Budget { max_nodes, max_millis: None }
    }

    pub fn with_wall_clock(mut self, millis: u64) -> Self {
        self.max_millis = Some(millis);
        self
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn max_millis(&self) -> Option<u64> {
        self.max_millis
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(Budget::DEFAULT_NODES)
    }
}
