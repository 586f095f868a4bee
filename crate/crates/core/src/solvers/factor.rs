//! Triangle-factor search: the aligned-matchings route (needs one complete
//! block), the Hall auxiliary-graph route (heuristic), and the exact
//! decision via early-exit packing with k = n.

use super::matching::RawBipartite;
use super::packing::{find_k_disjoint, KPackingOutcome};
use super::{Budget, SolverError};
use crate::graph::{PairTag, Triangle, TripartiteGraph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorStatus {
    FactorFound,
    NoFactor,
    Unknown,
}

/// When found, the triangles partition all 3n vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorResult {
    pub status: FactorStatus,
    pub triangles: Vec<Triangle>,
}

impl FactorResult {
    fn found(mut triangles: Vec<Triangle>) -> Self {
        triangles.sort_unstable();
        FactorResult { status: FactorStatus::FactorFound, triangles }
    }

    fn no_factor() -> Self {
        FactorResult { status: FactorStatus::NoFactor, triangles: Vec::new() }
    }

    fn unknown() -> Self {
        FactorResult { status: FactorStatus::Unknown, triangles: Vec::new() }
    }
}

/// Perfect matching of one full block in local = original indices.
fn perfect_block_matching(g: &TripartiteGraph, pair: PairTag) -> Option<Vec<usize>> {
    let sizes = g.part_sizes();
    let (rows, cols) = match pair {
        PairTag::Ab => (sizes[0], sizes[1]),
        PairTag::Ac => (sizes[0], sizes[2]),
        PairTag::Bc => (sizes[1], sizes[2]),
    };
    let adj: Vec<Vec<usize>> =
        (0..rows).map(|r| (0..cols).filter(|&c| g.has_edge(pair, r, c)).collect()).collect();
    let out = RawBipartite { n_right: cols, adj }.solve();
    if out.pairs.len() < rows.max(cols) {
        return None;
    }
    let mut partner = vec![0usize; rows];
    for (l, r) in out.pairs {
        partner[l] = r;
    }
    Some(partner)
}

/// Aligns perfect matchings of the AC and BC blocks at their shared part;
/// with AB complete, every aligned triple closes into a triangle. With that
/// block complete the route is decisive: a factor embeds a perfect matching
/// in each block, so a missing one rules the factor out.
pub fn factor_from_matchings(g: &TripartiteGraph) -> Result<FactorResult, SolverError> {
    let sizes = g.part_sizes();
    let n = g.balanced_n().ok_or(SolverError::Unbalanced { sizes })?;
    if g.edge_counts()[0] != n * n {
        return Err(SolverError::PairNotComplete { pair: PairTag::Ab });
    }
    let Some(ac) = perfect_block_matching(g, PairTag::Ac) else {
        return Ok(FactorResult::no_factor());
    };
    let Some(bc) = perfect_block_matching(g, PairTag::Bc) else {
        return Ok(FactorResult::no_factor());
    };
    let mut a_of = vec![0usize; n];
    let mut b_of = vec![0usize; n];
    for a in 0..n {
        a_of[ac[a]] = a;
    }
    for b in 0..n {
        b_of[bc[b]] = b;
    }
    let triangles: Vec<Triangle> = (0..n).map(|c| Triangle::new(a_of[c], b_of[c], c)).collect();
    debug_assert!(triangles.iter().all(|t| g.is_triangle(t)));
    Ok(FactorResult::found(triangles))
}

/// Hall route: fix a perfect matching M of the AB block, then match M
/// against C in the auxiliary graph whose (e, c) pairs are triangles.
/// Heuristic — a different choice of M might succeed, so failure returns
/// Unknown rather than NoFactor.
pub fn factor_via_hall(g: &TripartiteGraph) -> FactorResult {
    let Some(n) = g.balanced_n() else {
        return FactorResult::unknown();
    };
    let Some(ab) = perfect_block_matching(g, PairTag::Ab) else {
        return FactorResult::unknown();
    };
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            let b = ab[a];
            (0..n)
                .filter(|&c| g.has_edge(PairTag::Ac, a, c) && g.has_edge(PairTag::Bc, b, c))
                .collect()
        })
        .collect();
    let out = RawBipartite { n_right: n, adj }.solve();
    if out.pairs.len() < n {
        return FactorResult::unknown();
    }
    let triangles: Vec<Triangle> =
        out.pairs.into_iter().map(|(a, c)| Triangle::new(a, ab[a], c)).collect();
    debug_assert!(triangles.iter().all(|t| g.is_triangle(t)));
    FactorResult::found(triangles)
}

/// Exact decision: a factor is exactly n disjoint triangles, so run the
/// early-exit packing search at k = n and translate its outcome.
pub fn triangle_factor_exact(g: &TripartiteGraph, budget: &Budget) -> Result<FactorResult, SolverError> {
    let sizes = g.part_sizes();
    let n = g.balanced_n().ok_or(SolverError::Unbalanced { sizes })?;
    Ok(match find_k_disjoint(g, n, budget) {
        KPackingOutcome::Found(r) => FactorResult::found(r.triangles),
        KPackingOutcome::NotFound => FactorResult::no_factor(),
        KPackingOutcome::Unknown => FactorResult::unknown(),
    })
}
