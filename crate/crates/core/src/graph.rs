//! Tripartite graphs with bit-row adjacency, plus 3-partite 3-uniform
//! hypergraphs. Parts are called A, B, C; vertices are 0-based within each
//! part. All operations are pure: edits return a new graph.

use crate::rat::{density, Rat};
use serde::{Deserialize, Serialize};
use thiserror::Error;

// ===== errors ==============================================================

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("part {part} has size zero")]
    ZeroPart { part: char },
    #[error("vertex {index} out of range for part {part} (size {size})")]
    VertexOutOfRange { part: char, index: usize, size: usize },
    #[error("edge ({i},{j}) not present in pair {pair:?}")]
    MissingEdge { pair: PairTag, i: usize, j: usize },
}

// ===== bit matrix ==========================================================

/// Dense 0/1 matrix, one row per lower-part vertex, packed into u64 words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix { rows, cols, words_per_row, bits: vec![0; rows * words_per_row] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        let w = self.bits[r * self.words_per_row + c / 64];
        (w >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let word = &mut self.bits[r * self.words_per_row + c / 64];
        if value {
            *word |= 1 << (c % 64);
        } else {
            *word &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Iterates set-bit positions of a packed row.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * 64 + bit)
        })
    })
}

/// Iterates set-bit positions of the AND of two equal-length rows.
pub fn ones_and<'a>(x: &'a [u64], y: &'a [u64]) -> impl Iterator<Item = usize> + 'a {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).enumerate().flat_map(|(wi, (&a, &b))| {
        let mut rest = a & b;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * 64 + bit)
        })
    })
}

// ===== core types ==========================================================

/// Which bipartite pair an edge lives in. Row index is always the
/// lower-lettered part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairTag {
    Ab,
    Ac,
    Bc,
}

impl PairTag {
    pub const ALL: [PairTag; 3] = [PairTag::Ab, PairTag::Ac, PairTag::Bc];

    /// Part letters (row, col) for error messages.
    fn letters(self) -> (char, char) {
        match self {
            PairTag::Ab => ('A', 'B'),
            PairTag::Ac => ('A', 'C'),
            PairTag::Bc => ('B', 'C'),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeRef {
    pub pair: PairTag,
    pub i: usize,
    pub j: usize,
}

impl EdgeRef {
    pub fn new(pair: PairTag, i: usize, j: usize) -> Self {
        EdgeRef { pair, i, j }
    }
}

pub type DeletionSet = Vec<EdgeRef>;

/// One triangle, one vertex per part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        Triangle { a, b, c }
    }
}

/// Exact pairwise edge densities (alpha: AB, beta: AC, gamma: BC).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityTriple {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
}

impl DensityTriple {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat) -> Self {
        debug_assert!(crate::rat::in_unit_interval(&alpha));
        debug_assert!(crate::rat::in_unit_interval(&beta));
        debug_assert!(crate::rat::in_unit_interval(&gamma));
        DensityTriple { alpha, beta, gamma }
    }
}

// ===== tripartite graph ====================================================

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteGraph {
    sizes: [usize; 3],
    adj_ab: BitMatrix,
    adj_ac: BitMatrix,
    adj_bc: BitMatrix,
    counts: [usize; 3],
}

impl TripartiteGraph {
    /// Builds a graph from explicit edge lists. Duplicate edges collapse
    /// silently; out-of-range endpoints and zero part sizes are errors.
    pub fn build(
        sizes: [usize; 3],
        edges_ab: &[(usize, usize)],
        edges_ac: &[(usize, usize)],
        edges_bc: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        for (part, &size) in ['A', 'B', 'C'].iter().zip(&sizes) {
            if size == 0 {
                return Err(GraphError::ZeroPart { part: *part });
            }
        }
        let mut g = Self::empty(sizes);
        for (pair, list) in [
            (PairTag::Ab, edges_ab),
            (PairTag::Ac, edges_ac),
            (PairTag::Bc, edges_bc),
        ] {
            for &(i, j) in list {
                g.check_endpoints(pair, i, j)?;
                g.insert_edge(pair, i, j);
            }
        }
        Ok(g)
    }

    /// Edgeless graph. Zero part sizes are permitted here so vertex-deleted
    /// subgraphs stay representable.
    pub(crate) fn empty(sizes: [usize; 3]) -> Self {
        TripartiteGraph {
            sizes,
            adj_ab: BitMatrix::new(sizes[0], sizes[1]),
            adj_ac: BitMatrix::new(sizes[0], sizes[2]),
            adj_bc: BitMatrix::new(sizes[1], sizes[2]),
            counts: [0; 3],
        }
    }

    fn check_endpoints(&self, pair: PairTag, i: usize, j: usize) -> Result<(), GraphError> {
        let m = self.matrix(pair);
        let (row_part, col_part) = pair.letters();
        if i >= m.rows() {
            return Err(GraphError::VertexOutOfRange { part: row_part, index: i, size: m.rows() });
        }
        if j >= m.cols() {
            return Err(GraphError::VertexOutOfRange { part: col_part, index: j, size: m.cols() });
        }
        Ok(())
    }

    fn matrix(&self, pair: PairTag) -> &BitMatrix {
        match pair {
            PairTag::Ab => &self.adj_ab,
            PairTag::Ac => &self.adj_ac,
            PairTag::Bc => &self.adj_bc,
        }
    }

    fn matrix_mut(&mut self, pair: PairTag) -> &mut BitMatrix {
        match pair {
            PairTag::Ab => &mut self.adj_ab,
            PairTag::Ac => &mut self.adj_ac,
            PairTag::Bc => &mut self.adj_bc,
        }
    }

    fn pair_index(pair: PairTag) -> usize {
        match pair {
            PairTag::Ab => 0,
            PairTag::Ac => 1,
            PairTag::Bc => 2,
        }
    }

    pub(crate) fn insert_edge(&mut self, pair: PairTag, i: usize, j: usize) {
        let idx = Self::pair_index(pair);
        let m = self.matrix_mut(pair);
        if !m.get(i, j) {
            m.set(i, j, true);
            self.counts[idx] += 1;
        }
    }

    pub fn part_sizes(&self) -> [usize; 3] {
        self.sizes
    }

    /// Edge counts per pair, ordered (AB, AC, BC).
    pub fn edge_counts(&self) -> [usize; 3] {
        self.counts
    }

    pub fn has_edge(&self, pair: PairTag, i: usize, j: usize) -> bool {
        self.matrix(pair).get(i, j)
    }

    /// Row-side neighbors of `i` in the given pair, ascending.
    pub fn neighbors(&self, pair: PairTag, i: usize) -> Vec<usize> {
        ones(self.matrix(pair).row(i)).collect()
    }

    /// Column-side neighbors of `j` in the given pair, ascending.
    pub fn col_neighbors(&self, pair: PairTag, j: usize) -> Vec<usize> {
        let m = self.matrix(pair);
        (0..m.rows()).filter(|&i| m.get(i, j)).collect()
    }

    /// Exact pairwise densities. Pairs with an empty side count as zero.
    pub fn densities(&self) -> DensityTriple {
        let [na, nb, nc] = self.sizes;
        DensityTriple::new(
            density(self.counts[0], na, nb),
            density(self.counts[1], na, nc),
            density(self.counts[2], nb, nc),
        )
    }

    /// All triangles in lexicographic (a, b, c) order.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for a in 0..self.sizes[0] {
            let row_ac = self.adj_ac.row(a);
            for b in ones(self.adj_ab.row(a)) {
                for c in ones_and(row_ac, self.adj_bc.row(b)) {
                    out.push(Triangle::new(a, b, c));
                }
            }
        }
        out
    }

    /// Triangle count without materializing the list.
    pub fn triangle_count(&self) -> u64 {
        let mut total = 0u64;
        for a in 0..self.sizes[0] {
            let row_ac = self.adj_ac.row(a);
            for b in ones(self.adj_ab.row(a)) {
                let row_bc = self.adj_bc.row(b);
                total += row_ac
                    .iter()
                    .zip(row_bc)
                    .map(|(&x, &y)| (x & y).count_ones() as u64)
                    .sum::<u64>();
            }
        }
        total
    }

    pub fn is_triangle(&self, t: &Triangle) -> bool {
        t.a < self.sizes[0]
            && t.b < self.sizes[1]
            && t.c < self.sizes[2]
            && self.has_edge(PairTag::Ab, t.a, t.b)
            && self.has_edge(PairTag::Ac, t.a, t.c)
            && self.has_edge(PairTag::Bc, t.b, t.c)
    }

    /// Removes the listed edges. Each referenced edge must be present when
    /// its turn comes, so a duplicated reference is an error.
    pub fn remove_edges(&self, deletions: &[EdgeRef]) -> Result<Self, GraphError> {
        let mut g = self.clone();
        for &EdgeRef { pair, i, j } in deletions {
            g.check_endpoints(pair, i, j)?;
            if !g.has_edge(pair, i, j) {
                return Err(GraphError::MissingEdge { pair, i, j });
            }
            let idx = Self::pair_index(pair);
            g.matrix_mut(pair).set(i, j, false);
            g.counts[idx] -= 1;
        }
        Ok(g)
    }

    /// Induced subgraph on the kept vertices (per part, any order, duplicates
    /// ignored). Kept parts may be empty.
    pub fn induced_subgraph(
        &self,
        keep_a: &[usize],
        keep_b: &[usize],
        keep_c: &[usize],
    ) -> Result<Self, GraphError> {
        let mut kept: [Vec<usize>; 3] = [keep_a.to_vec(), keep_b.to_vec(), keep_c.to_vec()];
        for (k, (part, size)) in kept.iter_mut().zip([('A', self.sizes[0]), ('B', self.sizes[1]), ('C', self.sizes[2])]) {
            k.sort_unstable();
            k.dedup();
            if let Some(&v) = k.iter().find(|&&v| v >= size) {
                return Err(GraphError::VertexOutOfRange { part, index: v, size });
            }
        }
        let mut g = Self::empty([kept[0].len(), kept[1].len(), kept[2].len()]);
        for (pair, rows, cols) in [
            (PairTag::Ab, &kept[0], &kept[1]),
            (PairTag::Ac, &kept[0], &kept[2]),
            (PairTag::Bc, &kept[1], &kept[2]),
        ] {
            for (ni, &oi) in rows.iter().enumerate() {
                for (nj, &oj) in cols.iter().enumerate() {
                    if self.has_edge(pair, oi, oj) {
                        g.insert_edge(pair, ni, nj);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Complement of `induced_subgraph`: drops the listed vertices.
    pub fn remove_vertices(
        &self,
        drop_a: &[usize],
        drop_b: &[usize],
        drop_c: &[usize],
    ) -> Result<Self, GraphError> {
        let keep = |size: usize, drop: &[usize]| -> Vec<usize> {
            (0..size).filter(|v| !drop.contains(v)).collect()
        };
        self.induced_subgraph(
            &keep(self.sizes[0], drop_a),
            &keep(self.sizes[1], drop_b),
            &keep(self.sizes[2], drop_c),
        )
    }

    /// Balanced part size, if all three parts agree.
    pub fn balanced_n(&self) -> Option<usize> {
        if self.sizes[0] == self.sizes[1] && self.sizes[1] == self.sizes[2] {
            Some(self.sizes[0])
        } else {
            None
        }
    }

    /// Sorted edge list of one pair.
    pub fn edge_list(&self, pair: PairTag) -> Vec<(usize, usize)> {
        let m = self.matrix(pair);
        let mut out = Vec::with_capacity(self.counts[Self::pair_index(pair)]);
        for i in 0..m.rows() {
            for j in ones(m.row(i)) {
                out.push((i, j));
            }
        }
        out
    }
}

// ===== hypergraph ==========================================================

/// 3-partite 3-uniform hypergraph with n vertices per part; an edge picks
/// one vertex from each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteHypergraph {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl TripartiteHypergraph {
    /// Builds from a triple list; duplicates collapse, order normalizes to
    /// lexicographic.
    pub fn build(n: usize, triples: &[[usize; 3]]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroPart { part: 'A' });
        }
        let mut edges = Vec::with_capacity(triples.len());
        for &t in triples {
            for (part, &v) in ['A', 'B', 'C'].iter().zip(&t) {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { part: *part, index: v, size: n });
                }
            }
            edges.push(t);
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(TripartiteHypergraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use num_traits::Zero;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Triple-loop oracle: checks every (a, b, c) against has_edge.
    fn naive_triangles(g: &TripartiteGraph) -> Vec<Triangle> {
        let [na, nb, nc] = g.part_sizes();
        let mut out = Vec::new();
        for a in 0..na {
            for b in 0..nb {
                for c in 0..nc {
                    let t = Triangle::new(a, b, c);
                    if g.is_triangle(&t) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    fn complete(sizes: [usize; 3]) -> TripartiteGraph {
        let all = |x: usize, y: usize| -> Vec<(usize, usize)> {
            (0..x).flat_map(|i| (0..y).map(move |j| (i, j))).collect()
        };
        TripartiteGraph::build(
            sizes,
            &all(sizes[0], sizes[1]),
            &all(sizes[0], sizes[2]),
            &all(sizes[1], sizes[2]),
        )
        .unwrap()
    }

    fn random_graph(rng: &mut StdRng, sizes: [usize; 3], p: f64) -> TripartiteGraph {
        let mut pick = |x: usize, y: usize| -> Vec<(usize, usize)> {
            (0..x)
                .flat_map(|i| (0..y).map(move |j| (i, j)))
                .filter(|_| rng.random_bool(p))
                .collect()
        };
        let ab = pick(sizes[0], sizes[1]);
        let ac = pick(sizes[0], sizes[2]);
        let bc = pick(sizes[1], sizes[2]);
        TripartiteGraph::build(sizes, &ab, &ac, &bc).unwrap()
    }

    #[test]
    fn build_rejects_zero_part() {
        let err = TripartiteGraph::build([0, 1, 1], &[], &[], &[]).unwrap_err();
        assert_eq!(err, GraphError::ZeroPart { part: 'A' });
    }

    #[test]
    fn build_rejects_out_of_range() {
        let err = TripartiteGraph::build([2, 2, 2], &[(0, 2)], &[], &[]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { part: 'B', index: 2, size: 2 });
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = TripartiteGraph::build([1, 1, 1], &[(0, 0), (0, 0)], &[(0, 0)], &[(0, 0)]).unwrap();
        assert_eq!(g.edge_counts(), [1, 1, 1]);
        assert_eq!(g.triangles(), vec![Triangle::new(0, 0, 0)]);
    }

    #[test]
    fn single_triangle_and_edge_removal() {
        let g = TripartiteGraph::build([1, 1, 1], &[(0, 0)], &[(0, 0)], &[(0, 0)]).unwrap();
        assert_eq!(g.triangles().len(), 1);
        let cut = g.remove_edges(&[EdgeRef::new(PairTag::Bc, 0, 0)]).unwrap();
        assert!(cut.triangles().is_empty());
        assert_eq!(cut.edge_counts(), [1, 1, 0]);
        // original untouched
        assert_eq!(g.edge_counts(), [1, 1, 1]);
    }

    #[test]
    fn remove_missing_edge_is_an_error() {
        let g = TripartiteGraph::build([1, 1, 1], &[(0, 0)], &[], &[]).unwrap();
        let err = g.remove_edges(&[EdgeRef::new(PairTag::Ac, 0, 0)]).unwrap_err();
        assert_eq!(err, GraphError::MissingEdge { pair: PairTag::Ac, i: 0, j: 0 });
        // duplicate reference trips the same check
        let err = g
            .remove_edges(&[EdgeRef::new(PairTag::Ab, 0, 0), EdgeRef::new(PairTag::Ab, 0, 0)])
            .unwrap_err();
        assert_eq!(err, GraphError::MissingEdge { pair: PairTag::Ab, i: 0, j: 0 });
    }

    #[test]
    fn complete_222_has_eight_triangles() {
        let g = complete([2, 2, 2]);
        let ts = g.triangles();
        assert_eq!(ts.len(), 8);
        assert_eq!(g.triangle_count(), 8);
        // dropping one BC edge kills the two triangles through it
        let cut = g.remove_edges(&[EdgeRef::new(PairTag::Bc, 0, 0)]).unwrap();
        assert_eq!(cut.triangles().len(), 6);
    }

    #[test]
    fn complete_222_minus_all_bc_is_triangle_free() {
        let g = complete([2, 2, 2]);
        let dels: Vec<EdgeRef> = (0..2)
            .flat_map(|i| (0..2).map(move |j| EdgeRef::new(PairTag::Bc, i, j)))
            .collect();
        let cut = g.remove_edges(&dels).unwrap();
        assert_eq!(cut.edge_counts(), [4, 4, 0]);
        assert!(cut.triangles().is_empty());
    }

    #[test]
    fn triangles_are_lexicographic() {
        let mut rng = StdRng::seed_from_u64(0xC0FFEE);
        for _ in 0..50 {
            let g = random_graph(&mut rng, [4, 5, 3], 0.5);
            let ts = g.triangles();
            let mut sorted = ts.clone();
            sorted.sort_unstable();
            assert_eq!(ts, sorted);
        }
    }

    #[test]
    fn enumeration_matches_triple_loop_oracle() {
        let mut rng = StdRng::seed_from_u64(0xBEEF);
        for round in 0..200 {
            let sizes = [
                rng.random_range(1..=6),
                rng.random_range(1..=6),
                rng.random_range(1..=6),
            ];
            let p = [0.15, 0.4, 0.7, 0.95][round % 4];
            let g = random_graph(&mut rng, sizes, p);
            assert_eq!(g.triangles(), naive_triangles(&g));
            assert_eq!(g.triangle_count() as usize, g.triangles().len());
        }
    }

    #[test]
    fn densities_are_exact_counts() {
        let g = complete([3, 3, 3]);
        let d = g.densities();
        assert_eq!(d.alpha, ratio(1, 1));
        assert_eq!(d.beta, ratio(1, 1));
        assert_eq!(d.gamma, ratio(1, 1));

        let zero = TripartiteGraph::build([2, 3, 4], &[], &[], &[]).unwrap();
        let d = zero.densities();
        assert!(d.alpha.is_zero() && d.beta.is_zero() && d.gamma.is_zero());
    }

    #[test]
    fn densities_match_recount_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let sizes = [
                rng.random_range(1..=7),
                rng.random_range(1..=7),
                rng.random_range(1..=7),
            ];
            let g = random_graph(&mut rng, sizes, 0.5);
            let d = g.densities();
            let [na, nb, nc] = g.part_sizes();
            let count = |pair: PairTag, x: usize, y: usize| -> usize {
                (0..x)
                    .flat_map(|i| (0..y).map(move |j| (i, j)))
                    .filter(|&(i, j)| g.has_edge(pair, i, j))
                    .count()
            };
            assert_eq!(d.alpha, density(count(PairTag::Ab, na, nb), na, nb));
            assert_eq!(d.beta, density(count(PairTag::Ac, na, nc), na, nc));
            assert_eq!(d.gamma, density(count(PairTag::Bc, nb, nc), nb, nc));
        }
    }

    #[test]
    fn induced_subgraph_remaps_and_recounts() {
        let g = complete([3, 3, 3]);
        let h = g.induced_subgraph(&[1, 2], &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(h.part_sizes(), [2, 3, 3]);
        assert_eq!(h.edge_counts(), [6, 6, 9]);
        assert_eq!(h.densities().alpha, ratio(1, 1));

        // dropping the only A vertex of a single triangle leaves none
        let t = TripartiteGraph::build([1, 1, 1], &[(0, 0)], &[(0, 0)], &[(0, 0)]).unwrap();
        let h = t.induced_subgraph(&[], &[0], &[0]).unwrap();
        assert_eq!(h.part_sizes(), [0, 1, 1]);
        assert!(h.triangles().is_empty());
        assert!(h.densities().alpha.is_zero());
    }

    #[test]
    fn induced_subgraph_matches_direct_recount() {
        let mut rng = StdRng::seed_from_u64(0xABCD);
        for _ in 0..60 {
            let sizes = [
                rng.random_range(2..=6),
                rng.random_range(2..=6),
                rng.random_range(2..=6),
            ];
            let g = random_graph(&mut rng, sizes, 0.6);
            let keep = |n: usize, rng: &mut StdRng| -> Vec<usize> {
                (0..n).filter(|_| rng.random_bool(0.7)).collect()
            };
            let (ka, kb, kc) = (keep(sizes[0], &mut rng), keep(sizes[1], &mut rng), keep(sizes[2], &mut rng));
            let h = g.induced_subgraph(&ka, &kb, &kc).unwrap();
            for (ni, &oi) in ka.iter().enumerate() {
                for (nj, &oj) in kb.iter().enumerate() {
                    assert_eq!(h.has_edge(PairTag::Ab, ni, nj), g.has_edge(PairTag::Ab, oi, oj));
                }
            }
            let e = h.edge_counts();
            assert_eq!(
                e[2],
                kb.iter()
                    .flat_map(|&i| kc.iter().map(move |&j| (i, j)))
                    .filter(|&(i, j)| g.has_edge(PairTag::Bc, i, j))
                    .count()
            );
        }
    }

    #[test]
    fn remove_vertices_complements_induced() {
        let g = complete([3, 3, 3]);
        let h = g.remove_vertices(&[0], &[], &[2]).unwrap();
        assert_eq!(h.part_sizes(), [2, 3, 2]);
        assert_eq!(h, g.induced_subgraph(&[1, 2], &[0, 1, 2], &[0, 1]).unwrap());
    }

    #[test]
    fn neighbor_views_agree_with_matrix() {
        let g = TripartiteGraph::build([2, 3, 2], &[(0, 1), (1, 0), (1, 2)], &[(0, 0)], &[(2, 1)]).unwrap();
        assert_eq!(g.neighbors(PairTag::Ab, 1), vec![0, 2]);
        assert_eq!(g.col_neighbors(PairTag::Ab, 0), vec![1]);
        assert_eq!(g.col_neighbors(PairTag::Bc, 1), vec![2]);
        assert_eq!(g.edge_list(PairTag::Ab), vec![(0, 1), (1, 0), (1, 2)]);
    }

    #[test]
    fn bit_iteration_crosses_word_boundaries() {
        let mut m = BitMatrix::new(1, 130);
        for c in [0, 63, 64, 65, 127, 128, 129] {
            m.set(0, c, true);
        }
        assert_eq!(ones(m.row(0)).collect::<Vec<_>>(), vec![0, 63, 64, 65, 127, 128, 129]);
        assert_eq!(m.count_ones(), 7);
        m.set(0, 64, false);
        assert!(!m.get(0, 64));
        assert_eq!(m.count_ones(), 6);
    }

    #[test]
    fn hypergraph_build_normalizes() {
        let h = TripartiteHypergraph::build(3, &[[2, 0, 1], [0, 0, 0], [2, 0, 1]]).unwrap();
        assert_eq!(h.edges(), &[[0, 0, 0], [2, 0, 1]]);
        assert_eq!(h.edge_count(), 2);
        let err = TripartiteHypergraph::build(2, &[[0, 2, 0]]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { part: 'B', index: 2, size: 2 });
    }
}
