//! Graph and hypergraph generators: complete graphs, the two equality
//! witnesses for the packing and factor thresholds, seeded random instances,
//! and the tight matching-number hypergraph.

use crate::graph::{GraphError, TripartiteGraph, TripartiteHypergraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Identifier of the PRNG plus sampling scheme used by the random
/// constructions. Instances are reproducible from (spec, seed) by any
/// implementation of the same scheme: ChaCha8 keyed by `seed_from_u64`,
/// edges chosen as a Fisher-Yates prefix of the row-major cell list, pairs
/// filled in order AB, AC, BC from one stream.
pub const RNG_ALGORITHM: &str = "chacha8/fisher-yates-prefix/v1";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("part size must be at least 1")]
    EmptyPart,
    #[error("{name} = {value} exceeds its bound {bound}")]
    ParameterOutOfRange { name: &'static str, value: usize, bound: usize },
    #[error("unsupported rng scheme {found:?}, this build implements {RNG_ALGORITHM:?}")]
    UnsupportedRng { found: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Reproducible description of a generated instance. Serialized alongside
/// generated graphs under the `provenance` key.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    Complete { n: usize },
    ExtremalPacking { n: usize, b1: usize, b2: usize, c1: usize },
    ExtremalFactor { n: usize, b1: usize, c1: usize },
    Random {
        n_a: usize,
        n_b: usize,
        n_c: usize,
        e_ab: usize,
        e_ac: usize,
        e_bc: usize,
        seed: u64,
        rng: String,
    },
    TightHypergraph { n: usize, k: usize },
    RandomHypergraph { n: usize, m: usize, seed: u64, rng: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generated {
    Graph(TripartiteGraph),
    Hypergraph(TripartiteHypergraph),
}

/// Materializes a spec. The spec's own `rng` field must name the scheme this
/// build implements, otherwise the instance would not be reproducible.
pub fn generate(spec: &ConstructionSpec) -> Result<Generated, ConstructionError> {
    match spec {
        ConstructionSpec::Complete { n } => Ok(Generated::Graph(complete_tripartite(*n)?)),
        ConstructionSpec::ExtremalPacking { n, b1, b2, c1 } => {
            Ok(Generated::Graph(extremal_packing(*n, *b1, *b2, *c1)?))
        }
        ConstructionSpec::ExtremalFactor { n, b1, c1 } => {
            Ok(Generated::Graph(extremal_factor(*n, *b1, *c1)?))
        }
        ConstructionSpec::Random { n_a, n_b, n_c, e_ab, e_ac, e_bc, seed, rng } => {
            if rng != RNG_ALGORITHM {
                return Err(ConstructionError::UnsupportedRng { found: rng.clone() });
            }
            Ok(Generated::Graph(random_tripartite(
                [*n_a, *n_b, *n_c],
                [*e_ab, *e_ac, *e_bc],
                *seed,
            )?))
        }
        ConstructionSpec::TightHypergraph { n, k } => {
            Ok(Generated::Hypergraph(tight_hypergraph(*n, *k)?))
        }
        ConstructionSpec::RandomHypergraph { n, m, seed, rng } => {
            if rng != RNG_ALGORITHM {
                return Err(ConstructionError::UnsupportedRng { found: rng.clone() });
            }
            Ok(Generated::Hypergraph(random_hypergraph(*n, *m, *seed)?))
        }
    }
}

fn all_pairs(x: usize, y: usize) -> Vec<(usize, usize)> {
    (0..x).flat_map(|i| (0..y).map(move |j| (i, j))).collect()
}

/// Complete balanced tripartite graph K_{n,n,n}.
pub fn complete_tripartite(n: usize) -> Result<TripartiteGraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyPart);
    }
    let block = all_pairs(n, n);
    Ok(TripartiteGraph::build([n, n, n], &block, &block, &block)?)
}

/// Equality witness for the k-triangle density threshold, k = b2 + 1.
///
/// B splits into B1 (first b1), B2 (next b2), B3 (rest); C into C1 (first
/// c1) and C2. Edges: A x (B1 u B2), A x C1, (B2 u B3) x C, B1 x C2.
/// Densities come out ((b1+b2)/n, c1/n, 1 - b1*c1/n^2); every triangle runs
/// through B2, so no packing exceeds b2, yet the first k-triangle inequality
/// holds with slack exactly zero.
pub fn extremal_packing(
    n: usize,
    b1: usize,
    b2: usize,
    c1: usize,
) -> Result<TripartiteGraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyPart);
    }
    if b1 + b2 > n {
        return Err(ConstructionError::ParameterOutOfRange { name: "b1 + b2", value: b1 + b2, bound: n });
    }
    if c1 > n {
        return Err(ConstructionError::ParameterOutOfRange { name: "c1", value: c1, bound: n });
    }
    let mut ab = Vec::new();
    let mut ac = Vec::new();
    let mut bc = Vec::new();
    for a in 0..n {
        for b in 0..b1 + b2 {
            ab.push((a, b));
        }
        for c in 0..c1 {
            ac.push((a, c));
        }
    }
    for b in 0..n {
        for c in 0..n {
            let in_b1 = b < b1;
            if !in_b1 || c >= c1 {
                bc.push((b, c));
            }
        }
    }
    Ok(TripartiteGraph::build([n, n, n], &ab, &ac, &bc)?)
}

/// Equality witness for the triangle-factor surplus condition.
///
/// Vertex x = A[0] reaches only B1 (first b1) and C1 (first c1); every other
/// A vertex is complete to B and C; B x C is complete except the B1 x C1
/// block. Surpluses come out (b1, c1, n - b1*c1), the first factor slack is
/// exactly zero, and x lies in no triangle.
pub fn extremal_factor(
    n: usize,
    b1: usize,
    c1: usize,
) -> Result<TripartiteGraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyPart);
    }
    if b1 > n {
        return Err(ConstructionError::ParameterOutOfRange { name: "b1", value: b1, bound: n });
    }
    if c1 > n {
        return Err(ConstructionError::ParameterOutOfRange { name: "c1", value: c1, bound: n });
    }
    let mut ab = Vec::new();
    let mut ac = Vec::new();
    let mut bc = Vec::new();
    for b in 0..b1 {
        ab.push((0, b));
    }
    for c in 0..c1 {
        ac.push((0, c));
    }
    for a in 1..n {
        for v in 0..n {
            ab.push((a, v));
            ac.push((a, v));
        }
    }
    for b in 0..n {
        for c in 0..n {
            if b >= b1 || c >= c1 {
                bc.push((b, c));
            }
        }
    }
    Ok(TripartiteGraph::build([n, n, n], &ab, &ac, &bc)?)
}

/// First `m` cells of a Fisher-Yates shuffle of 0..total.
fn choose_cells(rng: &mut ChaCha8Rng, total: usize, m: usize) -> Vec<usize> {
    debug_assert!(m <= total);
    let mut cells: Vec<usize> = (0..total).collect();
    for i in 0..m {
        let j = rng.random_range(i..total);
        cells.swap(i, j);
    }
    cells.truncate(m);
    cells
}

/// Random graph with exact per-pair edge counts, reproducible from the seed.
pub fn random_tripartite(
    sizes: [usize; 3],
    edges: [usize; 3],
    seed: u64,
) -> Result<TripartiteGraph, ConstructionError> {
    if sizes.contains(&0) {
        return Err(ConstructionError::EmptyPart);
    }
    let caps = [sizes[0] * sizes[1], sizes[0] * sizes[2], sizes[1] * sizes[2]];
    for ((&e, &cap), name) in edges.iter().zip(&caps).zip(["e_ab", "e_ac", "e_bc"]) {
        if e > cap {
            return Err(ConstructionError::ParameterOutOfRange { name: match name {
                "e_ab" => "e_ab",
                "e_ac" => "e_ac",
                _ => "e_bc",
            }, value: e, bound: cap });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cols = [sizes[1], sizes[2], sizes[2]];
    let mut lists: [Vec<(usize, usize)>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for p in 0..3 {
        lists[p] = choose_cells(&mut rng, caps[p], edges[p])
            .into_iter()
            .map(|cell| (cell / cols[p], cell % cols[p]))
            .collect();
    }
    Ok(TripartiteGraph::build(sizes, &lists[0], &lists[1], &lists[2])?)
}

/// Spec for a random graph with this build's rng identifier filled in.
pub fn random_spec(sizes: [usize; 3], edges: [usize; 3], seed: u64) -> ConstructionSpec {
    ConstructionSpec::Random {
        n_a: sizes[0],
        n_b: sizes[1],
        n_c: sizes[2],
        e_ab: edges[0],
        e_ac: edges[1],
        e_bc: edges[2],
        seed,
        rng: RNG_ALGORITHM.to_string(),
    }
}

/// All (k-1) n^2 triples through the first k-1 vertices of part 1: the
/// largest edge count that still caps the matching number at k-1.
pub fn tight_hypergraph(n: usize, k: usize) -> Result<TripartiteHypergraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyPart);
    }
    if k < 1 || k > n {
        return Err(ConstructionError::ParameterOutOfRange { name: "k", value: k, bound: n });
    }
    let mut triples = Vec::with_capacity((k - 1) * n * n);
    for a in 0..k - 1 {
        for b in 0..n {
            for c in 0..n {
                triples.push([a, b, c]);
            }
        }
    }
    Ok(TripartiteHypergraph::build(n, &triples)?)
}

/// Random hypergraph with exactly m distinct edges, reproducible from the
/// seed.
pub fn random_hypergraph(
    n: usize,
    m: usize,
    seed: u64,
) -> Result<TripartiteHypergraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyPart);
    }
    let total = n * n * n;
    if m > total {
        return Err(ConstructionError::ParameterOutOfRange { name: "m", value: m, bound: total });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[usize; 3]> = choose_cells(&mut rng, total, m)
        .into_iter()
        .map(|cell| [cell / (n * n), (cell / n) % n, cell % n])
        .collect();
    Ok(TripartiteHypergraph::build(n, &triples)?)
}

pub fn random_hypergraph_spec(n: usize, m: usize, seed: u64) -> ConstructionSpec {
    ConstructionSpec::RandomHypergraph { n, m, seed, rng: RNG_ALGORITHM.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PairTag;
    use crate::rat::{int, ratio, Rat};

    #[test]
    fn complete_is_complete() {
        let g = complete_tripartite(2).unwrap();
        assert_eq!(g.edge_counts(), [4, 4, 4]);
        assert_eq!(g.triangles().len(), 8);
        let d = g.densities();
        assert_eq!(d.alpha, int(1));
        assert_eq!(complete_tripartite(0).unwrap_err(), ConstructionError::EmptyPart);
    }

    #[test]
    fn packing_witness_frozen_example() {
        let g = extremal_packing(12, 4, 1, 9).unwrap();
        assert_eq!(g.edge_counts(), [60, 108, 108]);
        let d = g.densities();
        assert_eq!(d.alpha, ratio(5, 12));
        assert_eq!(d.beta, ratio(3, 4));
        assert_eq!(d.gamma, ratio(3, 4));
        let ts = g.triangles();
        assert_eq!(ts.len(), 108);
        // every triangle passes through the single B2 vertex (index b1 = 4)
        assert!(ts.iter().all(|t| t.b == 4));
    }

    #[test]
    fn packing_witness_densities_closed_form() {
        for n in 1..=9usize {
            for b1 in 0..=n {
                for b2 in 0..=n - b1 {
                    for c1 in 0..=n {
                        let g = extremal_packing(n, b1, b2, c1).unwrap();
                        let d = g.densities();
                        let nn = n as i64;
                        assert_eq!(d.alpha, ratio((b1 + b2) as i64, nn));
                        assert_eq!(d.beta, ratio(c1 as i64, nn));
                        assert_eq!(d.gamma, int(1) - ratio((b1 * c1) as i64, nn * nn));
                        // triangles live in A x B2 x C1
                        assert_eq!(g.triangle_count() as usize, n * b2 * c1);
                        assert!(g.triangles().iter().all(|t| t.b >= b1 && t.b < b1 + b2 && t.c < c1));
                    }
                }
            }
        }
    }

    #[test]
    fn packing_witness_first_slack_is_exactly_zero() {
        // beta * (alpha - b2/n) + gamma == 1 identically, where k - 1 = b2
        for (n, b1, b2, c1) in [(12usize, 4usize, 1usize, 9usize), (6, 2, 2, 3), (14, 5, 3, 6), (8, 0, 2, 8)] {
            let g = extremal_packing(n, b1, b2, c1).unwrap();
            let d = g.densities();
            let shift = ratio(b2 as i64, n as i64);
            let lhs: Rat = d.beta.clone() * (d.alpha.clone() - shift) + d.gamma.clone();
            assert_eq!(lhs, int(1));
        }
    }

    #[test]
    fn packing_witness_with_full_blocks_is_complete() {
        for n in 1..=5 {
            assert_eq!(extremal_packing(n, 0, n, n).unwrap(), complete_tripartite(n).unwrap());
        }
    }

    #[test]
    fn packing_witness_rejects_oversized_blocks() {
        assert!(matches!(
            extremal_packing(5, 4, 2, 1).unwrap_err(),
            ConstructionError::ParameterOutOfRange { name: "b1 + b2", .. }
        ));
        assert!(matches!(
            extremal_packing(5, 1, 1, 6).unwrap_err(),
            ConstructionError::ParameterOutOfRange { name: "c1", .. }
        ));
    }

    #[test]
    fn factor_witness_frozen_example() {
        let g = extremal_factor(4, 2, 3).unwrap();
        assert_eq!(g.edge_counts(), [14, 15, 10]);
        // x = A[0] lies in no triangle
        assert!(g.triangles().iter().all(|t| t.a != 0));
        // the B1 x C1 block is exactly what is missing from BC
        for b in 0..4 {
            for c in 0..4 {
                assert_eq!(g.has_edge(PairTag::Bc, b, c), b >= 2 || c >= 3);
            }
        }
    }

    #[test]
    fn factor_witness_surpluses_closed_form() {
        for n in 1..=8usize {
            for b1 in 0..=n {
                for c1 in 0..=n {
                    let g = extremal_factor(n, b1, c1).unwrap();
                    let [eab, eac, ebc] = g.edge_counts();
                    let nn = n as i64;
                    let s_ab = eab as i64 - nn * (nn - 1);
                    let s_ac = eac as i64 - nn * (nn - 1);
                    let s_bc = ebc as i64 - nn * (nn - 1);
                    assert_eq!(s_ab, b1 as i64);
                    assert_eq!(s_ac, c1 as i64);
                    assert_eq!(s_bc, nn - (b1 * c1) as i64);
                    // first factor slack is identically zero
                    assert_eq!(s_ab * s_ac + s_bc - nn, 0);
                    assert!(g.triangles().iter().all(|t| t.a != 0));
                }
            }
        }
    }

    #[test]
    fn random_graph_has_exact_counts_and_replays() {
        let sizes = [5, 7, 6];
        let edges = [17, 11, 29];
        let g1 = random_tripartite(sizes, edges, 42).unwrap();
        let g2 = random_tripartite(sizes, edges, 42).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(g1.edge_counts(), edges);
        let g3 = random_tripartite(sizes, edges, 43).unwrap();
        assert_ne!(g1, g3);
        // saturated counts give the complete graph
        let full = random_tripartite([3, 3, 3], [9, 9, 9], 7).unwrap();
        assert_eq!(full, complete_tripartite(3).unwrap());
        let err = random_tripartite([2, 2, 2], [5, 0, 0], 0).unwrap_err();
        assert!(matches!(err, ConstructionError::ParameterOutOfRange { name: "e_ab", .. }));
    }

    #[test]
    fn tight_hypergraph_edge_counts() {
        let h = tight_hypergraph(3, 2).unwrap();
        assert_eq!(h.edge_count(), 9);
        assert!(h.edges().iter().all(|e| e[0] == 0));
        assert_eq!(tight_hypergraph(4, 1).unwrap().edge_count(), 0);
        assert_eq!(tight_hypergraph(2, 2).unwrap().edge_count(), 4);
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(tight_hypergraph(n, k).unwrap().edge_count(), (k - 1) * n * n);
            }
        }
        assert!(tight_hypergraph(3, 4).is_err());
    }

    #[test]
    fn random_hypergraph_has_exact_counts_and_replays() {
        let h1 = random_hypergraph(4, 20, 99).unwrap();
        let h2 = random_hypergraph(4, 20, 99).unwrap();
        assert_eq!(h1, h2);
        assert_eq!(h1.edge_count(), 20);
        assert_eq!(random_hypergraph(2, 8, 1).unwrap().edge_count(), 8);
        assert!(random_hypergraph(2, 9, 1).is_err());
    }

    #[test]
    fn generate_dispatches_and_validates_rng() {
        let spec = random_spec([3, 3, 3], [4, 5, 6], 11);
        match generate(&spec).unwrap() {
            Generated::Graph(g) => assert_eq!(g.edge_counts(), [4, 5, 6]),
            Generated::Hypergraph(_) => panic!("expected a graph"),
        }
        let bad = ConstructionSpec::Random {
            n_a: 3, n_b: 3, n_c: 3, e_ab: 4, e_ac: 5, e_bc: 6,
            seed: 11,
            rng: "other/v9".to_string(),
        };
        assert!(matches!(generate(&bad).unwrap_err(), ConstructionError::UnsupportedRng { .. }));
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = ConstructionSpec::ExtremalPacking { n: 12, b1: 4, b2: 1, c1: 9 };
        let text = serde_json::to_string(&spec).unwrap();
        assert!(text.contains("\"kind\":\"extremal-packing\""));
        let back: ConstructionSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
    }
}
