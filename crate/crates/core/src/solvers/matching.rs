//! Maximum bipartite matching (Hopcroft–Karp) together with a minimum
//! vertex cover read off the final alternating-reachability partition, so
//! |matching| = |cover| witnesses König's theorem on every call.

use crate::graph::{PairTag, TripartiteGraph};

const NIL: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockSide {
    Row,
    Col,
}

/// Matching edges and cover vertices carry the caller's vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingWithCover {
    pub matching: Vec<(usize, usize)>,
    pub cover: Vec<(BlockSide, usize)>,
}

/// Adjacency-list bipartite graph in local indices; shared by the public
/// block wrapper, the factor routes, and the deletion-set procedure.
pub(crate) struct RawBipartite {
    pub n_right: usize,
    pub adj: Vec<Vec<usize>>,
}

pub(crate) struct RawOutcome {
    /// (left, right) pairs, ascending by left index.
    pub pairs: Vec<(usize, usize)>,
    pub cover_left: Vec<usize>,
    pub cover_right: Vec<usize>,
}

impl RawBipartite {
    pub(crate) fn solve(&self) -> RawOutcome {
        let n_left = self.adj.len();
        let mut match_l = vec![NIL; n_left];
        let mut match_r = vec![NIL; self.n_right];

        // Hopcroft–Karp: BFS layers the graph by shortest alternating
        // distance, then DFS augments along layered paths, until no
        // augmenting path remains.
        let mut dist = vec![NIL; n_left];
        let mut queue = std::collections::VecDeque::new();
        loop {
            queue.clear();
            for u in 0..n_left {
                if match_l[u] == NIL {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = NIL;
                }
            }
            let mut layered = false;
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    let w = match_r[v];
                    if w == NIL {
                        layered = true;
                    } else if dist[w] == NIL {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if !layered {
                break;
            }
            for u in 0..n_left {
                if match_l[u] == NIL {
                    augment(&self.adj, &mut match_l, &mut match_r, &mut dist, u);
                }
            }
        }

        // König: alternating reachability from unmatched left vertices;
        // cover = (left not reached) ∪ (right reached).
        let mut seen_l = vec![false; n_left];
        let mut seen_r = vec![false; self.n_right];
        let mut stack: Vec<usize> = (0..n_left).filter(|&u| match_l[u] == NIL).collect();
        for &u in &stack {
            seen_l[u] = true;
        }
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if match_l[u] != v && !seen_r[v] {
                    seen_r[v] = true;
                    let w = match_r[v];
                    if w != NIL && !seen_l[w] {
                        seen_l[w] = true;
                        stack.push(w);
                    }
                }
            }
        }

        let pairs: Vec<(usize, usize)> =
            (0..n_left).filter(|&u| match_l[u] != NIL).map(|u| (u, match_l[u])).collect();
        let cover_left: Vec<usize> = (0..n_left).filter(|&u| !seen_l[u]).collect();
        let cover_right: Vec<usize> = (0..self.n_right).filter(|&v| seen_r[v]).collect();
        debug_assert_eq!(pairs.len(), cover_left.len() + cover_right.len());
        RawOutcome { pairs, cover_left, cover_right }
    }
}

fn augment(
    adj: &[Vec<usize>],
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
    u: usize,
) -> bool {
    for i in 0..adj[u].len() {
        let v = adj[u][i];
        let w = match_r[v];
        if w == NIL || (dist[w] == dist[u].wrapping_add(1) && augment(adj, match_l, match_r, dist, w)) {
            match_l[u] = v;
            match_r[v] = u;
            return true;
        }
    }
    dist[u] = NIL;
    false
}

/// Maximum matching and minimum vertex cover of the bipartite block induced
/// by the given row/column subsets (original part indices, duplicate-free
/// and in range; the row side is the lower-lettered part of the pair).
pub fn max_bipartite_matching_with_cover(
    g: &TripartiteGraph,
    pair: PairTag,
    row_subset: &[usize],
    col_subset: &[usize],
) -> MatchingWithCover {
    let sizes = g.part_sizes();
    let (row_size, col_size) = match pair {
        PairTag::Ab => (sizes[0], sizes[1]),
        PairTag::Ac => (sizes[0], sizes[2]),
        PairTag::Bc => (sizes[1], sizes[2]),
    };
    check_subset(row_subset, row_size);
    check_subset(col_subset, col_size);

    let adj: Vec<Vec<usize>> = row_subset
        .iter()
        .map(|&r| {
            col_subset
                .iter()
                .enumerate()
                .filter(|&(_, &c)| g.has_edge(pair, r, c))
                .map(|(ci, _)| ci)
                .collect()
        })
        .collect();
    let raw = RawBipartite { n_right: col_subset.len(), adj };
    let out = raw.solve();

    let matching: Vec<(usize, usize)> =
        out.pairs.iter().map(|&(l, r)| (row_subset[l], col_subset[r])).collect();
    let mut cover: Vec<(BlockSide, usize)> =
        out.cover_left.iter().map(|&l| (BlockSide::Row, row_subset[l])).collect();
    cover.extend(out.cover_right.iter().map(|&r| (BlockSide::Col, col_subset[r])));
    MatchingWithCover { matching, cover }
}

fn check_subset(subset: &[usize], size: usize) {
    let mut seen = vec![false; size];
    for &v in subset {
        assert!(v < size, "subset vertex {v} out of range for part of size {size}");
        assert!(!seen[v], "subset contains vertex {v} twice");
        seen[v] = true;
    }
}
