//! Cross-module schema checks on seeded random instances. Each test states a
//! hypothesis in exact rational arithmetic computed here, independently of
//! the library's predicate helpers, and then asks the exact solvers for the
//! structure the hypothesis promises — no tolerance, no sampling shortcut on
//! the conclusion side. Solver certificates are re-validated from scratch.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tripack_core::codec::{decode_document, encode_hypergraph_with_provenance, encode_with_provenance, Document};
use tripack_core::constructions::{
    extremal_factor, extremal_packing, generate, random_hypergraph, random_hypergraph_spec,
    random_spec, random_tripartite, Generated,
};
use tripack_core::graph::{DensityTriple, PairTag, Triangle, TripartiteGraph};
use tripack_core::rat::{is_positive, is_zero, one, ratio, Rat};
use tripack_core::solvers::{
    find_k_disjoint, lemma24_deletion_set, max_bipartite_matching_with_cover,
    max_triangle_packing, triangle_edges, triangle_factor_exact, BlockSide, Budget, FactorStatus,
    KPackingOutcome,
};
use tripack_core::thresholds::{factor_condition, is_cyclic, is_kn_cyclic, is_kn_cyclic_scaled};

// ===== harness =============================================================

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with each pair filled to at least `fill_pct` percent.
fn dense_graph(rng: &mut ChaCha8Rng, sizes: [usize; 3], fill_pct: usize) -> TripartiteGraph {
    let caps = [sizes[0] * sizes[1], sizes[0] * sizes[2], sizes[1] * sizes[2]];
    let mut edges = [0usize; 3];
    for (e, cap) in edges.iter_mut().zip(caps) {
        *e = rng.random_range(cap * fill_pct / 100..=cap);
    }
    random_tripartite(sizes, edges, rng.random::<u64>()).unwrap()
}

fn dense_balanced(rng: &mut ChaCha8Rng, n: usize, fill_pct: usize) -> TripartiteGraph {
    dense_graph(rng, [n, n, n], fill_pct)
}

/// `outer * (inner - shift) + add - 1`, the shifted slack every deletion
/// statement is phrased in.
fn shifted_slack(outer: &Rat, inner: &Rat, add: &Rat, shift: &Rat) -> Rat {
    outer.clone() * (inner.clone() - shift.clone()) + add.clone() - one()
}

/// The six shifted inequalities in role order, written out here rather than
/// taken from the verdict helper.
fn all_six_positive(d: &DensityTriple, k: usize, n: usize) -> bool {
    let s = ratio((k - 1) as i64, n as i64);
    let roles: [(&Rat, &Rat, &Rat); 6] = [
        (&d.beta, &d.alpha, &d.gamma),
        (&d.alpha, &d.beta, &d.gamma),
        (&d.gamma, &d.alpha, &d.beta),
        (&d.alpha, &d.gamma, &d.beta),
        (&d.gamma, &d.beta, &d.alpha),
        (&d.beta, &d.gamma, &d.alpha),
    ];
    roles.iter().all(|(o, i, a)| is_positive(&shifted_slack(o, i, a, &s)))
}

fn assert_disjoint_triangles(g: &TripartiteGraph, tris: &[Triangle]) {
    let [na, nb, nc] = g.part_sizes();
    let mut used = [vec![false; na], vec![false; nb], vec![false; nc]];
    for t in tris {
        assert!(g.is_triangle(t), "certificate lists a non-triangle {t:?}");
        for (part, v) in [(0, t.a), (1, t.b), (2, t.c)] {
            assert!(!used[part][v], "part {part} vertex {v} reused in certificate");
            used[part][v] = true;
        }
    }
}

// ===== density hypotheses force structures =================================

#[test]
fn cyclic_triples_force_a_triangle() {
    let mut rng = rng(0x1201);
    let mut hits = 0;
    for _ in 0..1500 {
        let n = rng.random_range(2..=6);
        let g = dense_balanced(&mut rng, n, 55);
        if !is_cyclic(&g.densities()) {
            continue;
        }
        hits += 1;
        let r = max_triangle_packing(&g, &Budget::default());
        assert!(r.proven_optimal);
        assert!(r.size >= 1, "cyclic densities but no triangle, n={n}");
    }
    assert!(hits >= 300, "only {hits} cyclic instances sampled");
}

#[test]
fn kn_cyclic_triples_force_k_disjoint_triangles() {
    let mut rng = rng(0x1401);
    // both shapes satisfy n >= 5k + 2, where the guarantee applies
    for (n, k, want) in [(12usize, 2usize, 40), (7, 1, 80)] {
        let mut hits = 0;
        for _ in 0..30 * want {
            if hits == want {
                break;
            }
            let g = dense_balanced(&mut rng, n, 80);
            if !is_kn_cyclic(&g.densities(), k, n).unwrap().satisfied {
                continue;
            }
            hits += 1;
            match find_k_disjoint(&g, k, &Budget::default()) {
                KPackingOutcome::Found(r) => {
                    assert_eq!(r.size, k);
                    assert_disjoint_triangles(&g, &r.triangles);
                }
                other => panic!("({k},{n})-cyclic instance lacks {k} disjoint triangles: {other:?}"),
            }
        }
        assert_eq!(hits, want, "sampler starved at (n,k)=({n},{k})");
    }
}

#[test]
fn factor_condition_forces_a_factor() {
    let mut rng = rng(0x1402);
    let mut hits = 0;
    for _ in 0..1200 {
        let n = rng.random_range(3..=6);
        let g = dense_balanced(&mut rng, n, 90);
        let verdict = factor_condition(&g).unwrap();
        // surpluses re-derived from raw counts
        let e = g.edge_counts();
        let base = (n * (n - 1)) as i64;
        assert_eq!(verdict.surplus.s_ab, e[0] as i64 - base);
        assert_eq!(verdict.surplus.s_ac, e[1] as i64 - base);
        assert_eq!(verdict.surplus.s_bc, e[2] as i64 - base);
        if !verdict.satisfied {
            continue;
        }
        hits += 1;
        let r = triangle_factor_exact(&g, &Budget::default()).unwrap();
        assert_eq!(r.status, FactorStatus::FactorFound, "condition met but no factor, n={n}");
        assert_eq!(r.triangles.len(), n);
        assert_disjoint_triangles(&g, &r.triangles);
    }
    assert!(hits >= 200, "only {hits} factor-condition instances sampled");
}

// ===== deletion schemas =====================================================

/// Parts U,V,W with S ⊆ V∪W, |S| ≤ k−1: both shifted inequalities survive
/// the deletion with the shift tightened to (k−1−|S|) over the shrunk sizes.
#[test]
fn delete_below_k_from_two_parts_preserves_the_pair_of_inequalities() {
    let mut rng = rng(0x3101);
    let (mut hits, mut deletion_hits) = (0, 0);
    for _ in 0..4000 {
        let nu = rng.random_range(3..=7);
        let nv = rng.random_range(3..=7);
        let nw = rng.random_range(3..=7);
        let k = rng.random_range(1..=3.min(nu.min(nv).min(nw)));
        let g = dense_graph(&mut rng, [nu, nv, nw], 75);
        let d = g.densities();
        let (lam, eta, mu) = (&d.alpha, &d.beta, &d.gamma);
        let hyp = is_positive(&shifted_slack(eta, lam, mu, &ratio((k - 1) as i64, nv as i64)))
            && is_positive(&shifted_slack(lam, eta, mu, &ratio((k - 1) as i64, nw as i64)));
        if !hyp {
            continue;
        }
        let t = rng.random_range(0..k);
        let (mut drop_v, mut drop_w) = (Vec::new(), Vec::new());
        for idx in rand::seq::index::sample(&mut rng, nv + nw, t) {
            if idx < nv {
                drop_v.push(idx);
            } else {
                drop_w.push(idx - nv);
            }
        }
        let g2 = g.remove_vertices(&[], &drop_v, &drop_w).unwrap();
        let d2 = g2.densities();
        let [_, nv2, nw2] = g2.part_sizes();
        let left = (k - 1 - t) as i64;
        hits += 1;
        if t > 0 {
            deletion_hits += 1;
        }
        assert!(
            is_positive(&shifted_slack(&d2.beta, &d2.alpha, &d2.gamma, &ratio(left, nv2 as i64))),
            "first inequality lost after deleting {t} of {}/{}", nv, nw
        );
        assert!(
            is_positive(&shifted_slack(&d2.alpha, &d2.beta, &d2.gamma, &ratio(left, nw2 as i64))),
            "second inequality lost after deleting {t} of {}/{}", nv, nw
        );
    }
    assert!(hits >= 250, "only {hits} hypothesis hits");
    assert!(deletion_hits >= 60, "only {deletion_hits} hits deleted anything");
}

/// S ⊆ A with |S| ≤ k under α,β ≥ γ: the inequalities survive with shift
/// (k−|S|) over the untouched sizes |B|, |C|; the BC density is unchanged.
#[test]
fn delete_up_to_k_from_the_largest_part_preserves_the_pair_of_inequalities() {
    let mut rng = rng(0x3201);
    let (mut hits, mut deletion_hits) = (0, 0);
    for _ in 0..4000 {
        let nb = rng.random_range(3..=6);
        let nc = rng.random_range(3..=6);
        let na = nb.max(nc) + rng.random_range(0..=2);
        let k = rng.random_range(1..=3.min(nb.min(nc)));
        let g = dense_graph(&mut rng, [na, nb, nc], 80);
        let d = g.densities();
        if d.gamma > d.alpha || d.gamma > d.beta {
            continue;
        }
        let hyp = is_positive(&shifted_slack(&d.beta, &d.alpha, &d.gamma, &ratio(k as i64, nb as i64)))
            && is_positive(&shifted_slack(&d.alpha, &d.beta, &d.gamma, &ratio(k as i64, nc as i64)));
        if !hyp {
            continue;
        }
        let t = rng.random_range(0..=k);
        let drop_a: Vec<usize> = rand::seq::index::sample(&mut rng, na, t).into_iter().collect();
        let g2 = g.remove_vertices(&drop_a, &[], &[]).unwrap();
        let d2 = g2.densities();
        assert_eq!(d2.gamma, d.gamma, "BC density must not move when S ⊆ A");
        let left = (k - t) as i64;
        hits += 1;
        if t > 0 {
            deletion_hits += 1;
        }
        assert!(
            is_positive(&shifted_slack(&d2.beta, &d2.alpha, &d2.gamma, &ratio(left, nb as i64))),
            "first inequality lost after deleting {t} of A (|A|={na})"
        );
        assert!(
            is_positive(&shifted_slack(&d2.alpha, &d2.beta, &d2.gamma, &ratio(left, nc as i64))),
            "second inequality lost after deleting {t} of A (|A|={na})"
        );
    }
    assert!(hits >= 200, "only {hits} hypothesis hits");
    assert!(deletion_hits >= 60, "only {deletion_hits} hits deleted anything");
}

/// Balanced graph, |V₀| ≤ k−1 arbitrary: if the six shifted inequalities
/// held before and the deleted graph's smallest density sits on the BC
/// block, the two inequalities pairing the other blocks survive with shift
/// (k−1−|V₀|) over the shrunk sizes.
#[test]
fn delete_below_k_anywhere_preserves_the_leading_pair() {
    let mut rng = rng(0x3301);
    let (mut hits, mut deletion_hits) = (0, 0);
    for _ in 0..3000 {
        let n = rng.random_range(3..=7);
        let k = rng.random_range(1..=3.min(n));
        let g = dense_balanced(&mut rng, n, 85);
        let d = g.densities();
        let hyp = all_six_positive(&d, k, n);
        assert_eq!(hyp, is_kn_cyclic(&d, k, n).unwrap().satisfied);
        if !hyp {
            continue;
        }
        let t = rng.random_range(0..k);
        let (mut drop_a, mut drop_b, mut drop_c) = (Vec::new(), Vec::new(), Vec::new());
        for idx in rand::seq::index::sample(&mut rng, 3 * n, t) {
            match idx / n {
                0 => drop_a.push(idx % n),
                1 => drop_b.push(idx % n),
                _ => drop_c.push(idx % n),
            }
        }
        let g2 = g.remove_vertices(&drop_a, &drop_b, &drop_c).unwrap();
        let d2 = g2.densities();
        let (lam, eta, mu) = (&d2.alpha, &d2.beta, &d2.gamma);
        if mu > lam || mu > eta {
            continue;
        }
        let [_, nb2, nc2] = g2.part_sizes();
        let left = (k - 1 - t) as i64;
        hits += 1;
        if t > 0 {
            deletion_hits += 1;
        }
        assert!(
            is_positive(&shifted_slack(lam, eta, mu, &ratio(left, nc2 as i64))),
            "first inequality lost after deleting {t} of 3n={}", 3 * n
        );
        assert!(
            is_positive(&shifted_slack(eta, lam, mu, &ratio(left, nb2 as i64))),
            "second inequality lost after deleting {t} of 3n={}", 3 * n
        );
    }
    assert!(hits >= 150, "only {hits} hypothesis hits");
    assert!(deletion_hits >= 40, "only {deletion_hits} hits deleted anything");
}

// ===== solver certificates ==================================================

#[test]
fn isolating_deletion_sets_validate_on_random_instances() {
    let mut rng = rng(0x2401);
    let mut isolated = 0;
    for _ in 0..900 {
        let sizes = [
            rng.random_range(2..=5),
            rng.random_range(2..=5),
            rng.random_range(2..=5),
        ];
        let caps = [sizes[0] * sizes[1], sizes[0] * sizes[2], sizes[1] * sizes[2]];
        let mut edges = [0usize; 3];
        for (e, cap) in edges.iter_mut().zip(caps) {
            *e = rng.random_range(2..=(2 * cap + 4) / 5);
        }
        let g = random_tripartite(sizes, edges, rng.random::<u64>()).unwrap();
        let tris = g.triangles();
        if tris.is_empty() {
            continue;
        }
        let t = tris[rng.random_range(0..tris.len())];
        let Ok(e0) = lemma24_deletion_set(&g, &t) else {
            continue;
        };
        isolated += 1;
        for pair in PairTag::ALL {
            assert!(e0.iter().filter(|e| e.pair == pair).count() <= 2, "more than 2 edges on {pair:?}");
        }
        let te = triangle_edges(&t);
        assert!(e0.iter().all(|e| !te.contains(e)), "deletion set touches the triangle itself");
        let mut all = e0.clone();
        all.extend(te);
        assert_eq!(
            g.remove_edges(&all).unwrap().triangle_count(),
            0,
            "triangles survive the deletion set"
        );
    }
    assert!(isolated >= 60, "only {isolated} instances passed the preconditions");
}

#[test]
fn packing_certificates_are_sound_and_optimality_is_consistent() {
    let mut rng = rng(0x2501);
    for _ in 0..400 {
        let sizes = [
            rng.random_range(1..=5),
            rng.random_range(1..=5),
            rng.random_range(1..=5),
        ];
        let caps = [sizes[0] * sizes[1], sizes[0] * sizes[2], sizes[1] * sizes[2]];
        let mut edges = [0usize; 3];
        for (e, cap) in edges.iter_mut().zip(caps) {
            *e = rng.random_range(0..=cap);
        }
        let g = random_tripartite(sizes, edges, rng.random::<u64>()).unwrap();
        let r = max_triangle_packing(&g, &Budget::default());
        assert!(r.proven_optimal);
        assert_eq!(r.size, r.triangles.len());
        assert_disjoint_triangles(&g, &r.triangles);
        match find_k_disjoint(&g, r.size.max(1), &Budget::default()) {
            KPackingOutcome::Found(f) => {
                assert_eq!(f.size, r.size.max(1));
                assert!(f.proven_optimal);
                assert_disjoint_triangles(&g, &f.triangles);
            }
            KPackingOutcome::NotFound => assert_eq!(r.size, 0),
            KPackingOutcome::Unknown => panic!("default budget exhausted on a tiny graph"),
        }
        assert!(matches!(
            find_k_disjoint(&g, r.size + 1, &Budget::default()),
            KPackingOutcome::NotFound
        ));
    }
}

#[test]
fn block_matchings_carry_a_konig_cover() {
    let mut rng = rng(0x2601);
    for _ in 0..300 {
        let sizes = [
            rng.random_range(1..=6),
            rng.random_range(1..=6),
            rng.random_range(1..=6),
        ];
        let caps = [sizes[0] * sizes[1], sizes[0] * sizes[2], sizes[1] * sizes[2]];
        let mut edges = [0usize; 3];
        for (e, cap) in edges.iter_mut().zip(caps) {
            *e = rng.random_range(0..=cap);
        }
        let g = random_tripartite(sizes, edges, rng.random::<u64>()).unwrap();
        for pair in PairTag::ALL {
            let (nr, nc) = match pair {
                PairTag::Ab => (sizes[0], sizes[1]),
                PairTag::Ac => (sizes[0], sizes[2]),
                PairTag::Bc => (sizes[1], sizes[2]),
            };
            let rows: Vec<usize> = (0..nr).filter(|_| rng.random_bool(0.7)).collect();
            let cols: Vec<usize> = (0..nc).filter(|_| rng.random_bool(0.7)).collect();
            let m = max_bipartite_matching_with_cover(&g, pair, &rows, &cols);
            assert_eq!(m.matching.len(), m.cover.len(), "matching and cover sizes differ");
            let (mut used_r, mut used_c) = (vec![false; nr], vec![false; nc]);
            for &(i, j) in &m.matching {
                assert!(rows.contains(&i) && cols.contains(&j));
                assert!(g.has_edge(pair, i, j));
                assert!(!used_r[i] && !used_c[j], "matching shares an endpoint");
                used_r[i] = true;
                used_c[j] = true;
            }
            for &i in &rows {
                for &j in &cols {
                    if g.has_edge(pair, i, j) {
                        assert!(
                            m.cover.iter().any(|&(side, v)| match side {
                                BlockSide::Row => v == i,
                                BlockSide::Col => v == j,
                            }),
                            "edge ({i},{j}) of {pair:?} escapes the cover"
                        );
                    }
                }
            }
        }
    }
}

// ===== provenance and boundary constructions ================================

#[test]
fn provenance_replays_to_the_identical_instance() {
    let mut rng = rng(0x0601);
    for _ in 0..60 {
        let sizes = [
            rng.random_range(1..=6),
            rng.random_range(1..=6),
            rng.random_range(1..=6),
        ];
        let caps = [sizes[0] * sizes[1], sizes[0] * sizes[2], sizes[1] * sizes[2]];
        let mut edges = [0usize; 3];
        for (e, cap) in edges.iter_mut().zip(caps) {
            *e = rng.random_range(0..=cap);
        }
        let seed = rng.random::<u64>();
        let g = random_tripartite(sizes, edges, seed).unwrap();
        let spec = random_spec(sizes, edges, seed);
        let text = encode_with_provenance(&g, &spec);
        let Document::Graph(back, Some(prov)) = decode_document(&text).unwrap() else {
            panic!("expected a graph document with provenance");
        };
        assert_eq!(back, g);
        assert_eq!(generate(&prov).unwrap(), Generated::Graph(g));
    }
    for _ in 0..30 {
        let n = rng.random_range(1..=5);
        let m = rng.random_range(0..=n * n * n);
        let seed = rng.random::<u64>();
        let h = random_hypergraph(n, m, seed).unwrap();
        let spec = random_hypergraph_spec(n, m, seed);
        let text = encode_hypergraph_with_provenance(&h, &spec);
        let Document::Hypergraph(back, Some(prov)) = decode_document(&text).unwrap() else {
            panic!("expected a hypergraph document with provenance");
        };
        assert_eq!(back, h);
        assert_eq!(generate(&prov).unwrap(), Generated::Hypergraph(h));
    }
}

#[test]
fn extremal_constructions_sit_exactly_on_the_boundary() {
    for n in 4..=9usize {
        for b2 in 1..=2usize {
            for b1 in 0..=n - b2 {
                for c1 in b2..=n {
                    let g = extremal_packing(n, b1, b2, c1).unwrap();
                    let v = is_kn_cyclic(&g.densities(), b2 + 1, n).unwrap();
                    assert!(is_zero(&v.slacks[0]), "({n},{b1},{b2},{c1}) slack not zero");
                    assert!(!v.satisfied);
                }
            }
        }
        for b1 in 1..=n {
            for c1 in 1..=n {
                let g = extremal_factor(n, b1, c1).unwrap();
                let v = factor_condition(&g).unwrap();
                assert_eq!(v.slacks[0], 0, "({n},{b1},{c1}) factor slack not zero");
                assert!(!v.satisfied);
                assert!(g.triangles().iter().all(|t| t.a != 0), "x sits in a triangle");
            }
        }
    }
}

#[test]
fn scaled_predicate_agrees_on_graph_densities() {
    let mut rng = rng(0x2602);
    for _ in 0..800 {
        let n = rng.random_range(1..=8);
        let g = dense_balanced(&mut rng, n, 0);
        let k = rng.random_range(1..=n);
        let d = g.densities();
        assert_eq!(
            is_kn_cyclic(&d, k, n).unwrap().satisfied,
            is_kn_cyclic_scaled(&d, k, n).unwrap(),
            "forms disagree at n={n}, k={k}"
        );
    }
}
