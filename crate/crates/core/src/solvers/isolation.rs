//! Deletion sets that isolate a triangle: when every triangle of the graph
//! meets T and each corner of T is seen by at most two disjoint outside
//! edges, a set E₀ of at most two edges per pair-block (disjoint from E(T))
//! leaves G − E₀ − E(T) triangle-free. The construction follows the
//! matching/cover case split at the most-seen corner.

use super::matching::RawBipartite;
use super::packing::{find_k_disjoint, KPackingOutcome};
use super::Budget;
use crate::graph::{DeletionSet, EdgeRef, PairTag, Triangle, TripartiteGraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsolationError {
    #[error("the given triple {t:?} is not a triangle of the graph")]
    NotATriangle { t: Triangle },
    #[error("the graph has two vertex-disjoint triangles {first:?} and {second:?}")]
    TwoDisjointTriangles { first: Triangle, second: Triangle },
    #[error("corner {corner} of part {part} is seen by {found} vertex-disjoint outside edges (at most 2 allowed)")]
    CornerSeenByMany { part: usize, corner: usize, found: usize },
    #[error("the disjoint-triangle precondition check exhausted its search budget")]
    PreconditionUnverified,
}

/// Outside-edge block of one corner: the edges (u, w) between the other two
/// parts with u, w adjacent to the corner and outside V(T) — exactly the
/// edges that see the corner.
struct SeeingBlock {
    /// Parts of the row and column sides.
    row_part: usize,
    col_part: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

fn corner_vertices(t: &Triangle) -> [usize; 3] {
    [t.a, t.b, t.c]
}

fn pair_of_parts(p: usize, q: usize) -> PairTag {
    match (p.min(q), p.max(q)) {
        (0, 1) => PairTag::Ab,
        (0, 2) => PairTag::Ac,
        _ => PairTag::Bc,
    }
}

fn edge_between(g: &TripartiteGraph, p: usize, u: usize, q: usize, w: usize) -> Option<EdgeRef> {
    let (pair, i, j) = if p < q { (pair_of_parts(p, q), u, w) } else { (pair_of_parts(p, q), w, u) };
    g.has_edge(pair, i, j).then(|| EdgeRef::new(pair, i, j))
}

fn seeing_block(g: &TripartiteGraph, t: &Triangle, part: usize) -> SeeingBlock {
    let corners = corner_vertices(t);
    let v = corners[part];
    let row_part = if part == 0 { 1 } else { 0 };
    let col_part = if part == 2 { 1 } else { 2 };
    let neighbors = |other: usize| -> Vec<usize> {
        let pair = pair_of_parts(part, other);
        let list =
            if part < other { g.neighbors(pair, v) } else { g.col_neighbors(pair, v) };
        list.into_iter().filter(|&x| x != corners[other]).collect()
    };
    let rows = neighbors(row_part);
    let cols = neighbors(col_part);
    let block_pair = pair_of_parts(row_part, col_part);
    let mut edge_count = 0;
    let adj: Vec<Vec<usize>> = rows
        .iter()
        .map(|&r| {
            let row: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(_, &c)| g.has_edge(block_pair, r, c))
                .map(|(ci, _)| ci)
                .collect();
            edge_count += row.len();
            row
        })
        .collect();
    SeeingBlock { row_part, col_part, rows, cols, adj, edge_count }
}

/// E₀ per the two-case construction. Validates each precondition and names
/// the violated one.
pub fn lemma24_deletion_set(g: &TripartiteGraph, t: &Triangle) -> Result<DeletionSet, IsolationError> {
    if !g.is_triangle(t) {
        return Err(IsolationError::NotATriangle { t: *t });
    }

    let corners = corner_vertices(t);
    let blocks: Vec<SeeingBlock> = (0..3).map(|p| seeing_block(g, t, p)).collect();
    let outcomes: Vec<_> = blocks
        .iter()
        .map(|b| RawBipartite { n_right: b.cols.len(), adj: b.adj.clone() }.solve())
        .collect();
    for part in 0..3 {
        let nu = outcomes[part].pairs.len();
        if nu > 2 {
            return Err(IsolationError::CornerSeenByMany {
                part,
                corner: corners[part],
                found: nu,
            });
        }
    }

    match find_k_disjoint(g, 2, &Budget::nodes(Budget::DEFAULT_NODES)) {
        KPackingOutcome::Found(r) => {
            return Err(IsolationError::TwoDisjointTriangles {
                first: r.triangles[0],
                second: r.triangles[1],
            })
        }
        KPackingOutcome::Unknown => return Err(IsolationError::PreconditionUnverified),
        KPackingOutcome::NotFound => {}
    }

    if blocks.iter().all(|b| b.edge_count == 0) {
        return Ok(Vec::new());
    }

    // Hub: the corner seen by the most outside edges (ties to the lowest
    // part). Its matching size is 1 or 2 here.
    let hub = (0..3).max_by_key(|&p| (blocks[p].edge_count, 2 - p)).unwrap();
    let hub_block = &blocks[hub];
    let hub_outcome = &outcomes[hub];
    let mut e0: DeletionSet = Vec::new();

    if hub_outcome.pairs.len() == 2 {
        // Two disjoint seers force every other corner unseen; deleting all
        // edges inside {hub} ∪ cover kills every triangle through the hub.
        let cover: Vec<(usize, usize)> = cover_vertices(hub_block, hub_outcome);
        for &(part, vertex) in &cover {
            let edge = edge_between(g, hub, corners[hub], part, vertex)
                .expect("cover vertices are hub neighbors");
            e0.push(edge);
        }
        if cover.len() == 2 && cover[0].0 != cover[1].0 {
            if let Some(edge) = edge_between(g, cover[0].0, cover[0].1, cover[1].0, cover[1].1) {
                e0.push(edge);
            }
        }
    } else {
        // Single-matching case: each corner's seers have a cover of at most
        // one vertex; delete the corner-to-cover edges.
        for part in 0..3 {
            let cover = cover_vertices(&blocks[part], &outcomes[part]);
            debug_assert!(cover.len() <= 1, "non-hub matching exceeded the hub's");
            for &(cover_part, vertex) in &cover {
                let edge = edge_between(g, part, corners[part], cover_part, vertex)
                    .expect("cover vertices are corner neighbors");
                e0.push(edge);
            }
        }
    }

    e0.sort_unstable();
    e0.dedup();
    debug_assert!(e0.iter().all(|e| !is_triangle_edge(t, e)));
    Ok(e0)
}

fn cover_vertices(block: &SeeingBlock, outcome: &super::matching::RawOutcome) -> Vec<(usize, usize)> {
    let mut cover: Vec<(usize, usize)> = outcome
        .cover_left
        .iter()
        .map(|&l| (block.row_part, block.rows[l]))
        .chain(outcome.cover_right.iter().map(|&r| (block.col_part, block.cols[r])))
        .collect();
    cover.sort_unstable();
    cover
}

fn is_triangle_edge(t: &Triangle, e: &EdgeRef) -> bool {
    match e.pair {
        PairTag::Ab => e.i == t.a && e.j == t.b,
        PairTag::Ac => e.i == t.a && e.j == t.c,
        PairTag::Bc => e.i == t.b && e.j == t.c,
    }
}

/// E(T) as edge references, for removing the triangle alongside E₀.
pub fn triangle_edges(t: &Triangle) -> [EdgeRef; 3] {
    [
        EdgeRef::new(PairTag::Ab, t.a, t.b),
        EdgeRef::new(PairTag::Ac, t.a, t.c),
        EdgeRef::new(PairTag::Bc, t.b, t.c),
    ]
}
