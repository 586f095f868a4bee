//! Sweep engine behind the `tripack` binary: deterministic per-index
//! instance streams, exact rational hypothesis filters, solver-backed
//! conclusion checks, and JSON reports whose every record replays from the
//! suite name, master seed, and index alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;
use thiserror::Error;
use tripack_core::constructions::{
    extremal_packing, random_hypergraph, random_hypergraph_spec, random_spec, random_tripartite,
    ConstructionSpec,
};
use tripack_core::graph::{DensityTriple, PairTag, Triangle, TripartiteGraph};
use tripack_core::rat::{is_positive, is_zero, one, ratio, Rat};
use tripack_core::solvers::{
    find_k_disjoint, hypergraph_max_matching, lemma24_deletion_set, max_triangle_packing,
    triangle_edges, triangle_factor_exact, Budget, FactorStatus, IsolationError, KPackingOutcome,
};
use tripack_core::thresholds::{
    curve_csv, curve_table, factor_condition, is_cyclic, is_kn_cyclic, is_kn_cyclic_scaled, tau,
};

// ===== errors ===============================================================

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Params(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn params_err<T>(msg: String) -> Result<T, CliError> {
    Err(CliError::Params(msg))
}

// ===== suites ===============================================================

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Suite {
    Theorem12,
    Theorem14,
    Factor,
    Lemma23,
    Lemma24,
    Lemma31,
    Lemma32,
    Lemma33,
    Prop25,
    Prop26,
    Tightness,
    Conjecture15Probe,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Theorem12,
        Suite::Theorem14,
        Suite::Factor,
        Suite::Lemma23,
        Suite::Lemma24,
        Suite::Lemma31,
        Suite::Lemma32,
        Suite::Lemma33,
        Suite::Prop25,
        Suite::Prop26,
        Suite::Tightness,
        Suite::Conjecture15Probe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem12 => "theorem12",
            Suite::Theorem14 => "theorem14",
            Suite::Factor => "factor",
            Suite::Lemma23 => "lemma23",
            Suite::Lemma24 => "lemma24",
            Suite::Lemma31 => "lemma31",
            Suite::Lemma32 => "lemma32",
            Suite::Lemma33 => "lemma33",
            Suite::Prop25 => "prop25",
            Suite::Prop26 => "prop26",
            Suite::Tightness => "tightness",
            Suite::Conjecture15Probe => "conjecture15-probe",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                CliError::Params(format!("unknown suite `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

// ===== parameters and report ================================================

/// Optional knobs shared by all suites; each suite fills in its own defaults
/// and sampling ranges for whatever is left unset.
#[derive(Clone, Copy, Debug)]
pub struct SweepParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub max_nodes: u64,
    /// Sample edge counts within ±2 of the governing equality manifold
    /// instead of uniformly; uniform sampling rarely lands near tightness.
    pub boundary_bias: bool,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams { n: None, k: None, max_nodes: Budget::DEFAULT_NODES, boundary_bias: false }
    }
}

/// Everything needed to replay one record: the per-index stream seed plus,
/// when the instance is a stored construction, its spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRef {
    pub index: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<ConstructionSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: InstanceRef,
    pub observed: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnknownRecord {
    pub instance: InstanceRef,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub violations: Vec<Violation>,
    pub unknown: Vec<UnknownRecord>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    /// 0 = clean, 1 = violations found (the interesting outcome for probes),
    /// 3 = every instance exhausted its budget.
    pub fn exit_code(&self) -> i32 {
        if self.samples > 0 && self.unknown.len() == self.samples {
            3
        } else if !self.violations.is_empty() {
            1
        } else {
            0
        }
    }
}

/// Per-instance outcome before report assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Violation { spec: Option<ConstructionSpec>, detail: Option<String>, observed: String, expected: String },
    Unknown { spec: Option<ConstructionSpec>, detail: Option<String>, reason: String },
}

// ===== deterministic streams ================================================

/// SplitMix64 of (master seed, index); distinct indices get independent
/// streams regardless of worker scheduling.
pub fn instance_seed(master_seed: u64, index: u64) -> u64 {
    let mut z = master_seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

// ===== engine ===============================================================

pub fn run_sweep(
    suite: Suite,
    params: &SweepParams,
    samples: usize,
    master_seed: u64,
    parallelism: usize,
) -> Result<SweepReport, CliError> {
    validate(suite, params)?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| CliError::Params(format!("could not build a {parallelism}-thread pool: {e}")))?;
    let p = *params;
    let outcomes: Vec<Outcome> = pool.install(|| {
        (0..samples).into_par_iter().map(|i| run_single(suite, &p, master_seed, i)).collect()
    });
    let mut violations = Vec::new();
    let mut unknown = Vec::new();
    for (index, outcome) in outcomes.into_iter().enumerate() {
        let seed = instance_seed(master_seed, index as u64);
        match outcome {
            Outcome::Pass => {}
            Outcome::Violation { spec, detail, observed, expected } => violations.push(Violation {
                instance: InstanceRef { index, seed, spec, detail },
                observed,
                expected,
            }),
            Outcome::Unknown { spec, detail, reason } => unknown.push(UnknownRecord {
                instance: InstanceRef { index, seed, spec, detail },
                reason,
            }),
        }
    }
    Ok(SweepReport {
        suite: suite.name().to_string(),
        seed: master_seed,
        samples,
        violations,
        unknown,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// One instance, fully determined by (suite, params, master seed, index).
/// Re-running an index reproduces its report record exactly.
pub fn run_single(suite: Suite, params: &SweepParams, master_seed: u64, index: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(master_seed, index as u64));
    let budget = Budget::nodes(params.max_nodes);
    match suite {
        Suite::Theorem12 => theorem12_single(params, &mut rng, &budget),
        Suite::Theorem14 => theorem14_single(params, &mut rng, &budget),
        Suite::Factor => factor_single(params, &mut rng, &budget),
        Suite::Lemma23 => lemma23_single(params, &mut rng, &budget),
        Suite::Lemma24 => lemma24_single(params, &mut rng),
        Suite::Lemma31 => lemma31_single(params, &mut rng),
        Suite::Lemma32 => lemma32_single(params, &mut rng),
        Suite::Lemma33 => lemma33_single(params, &mut rng),
        Suite::Prop25 => prop25_single(&mut rng),
        Suite::Prop26 => prop26_single(&mut rng),
        Suite::Tightness => tightness_single(params, &mut rng, &budget),
        Suite::Conjecture15Probe => probe_single(params, &mut rng, &budget),
    }
}

fn validate(suite: Suite, p: &SweepParams) -> Result<(), CliError> {
    if p.max_nodes < 1 {
        return params_err("max-nodes must be positive".to_string());
    }
    if p.n == Some(0) {
        return params_err("n must be positive".to_string());
    }
    if p.k == Some(0) {
        return params_err("k must be positive".to_string());
    }
    let (n_def, k_def) = suite_defaults(suite);
    let n = p.n.unwrap_or(n_def);
    let k = p.k.unwrap_or(k_def);
    match suite {
        Suite::Theorem14 | Suite::Lemma23 | Suite::Lemma31 | Suite::Lemma32 | Suite::Lemma33 => {
            if k > n {
                return params_err(format!("{suite} needs k <= n, got k={k}, n={n}"));
            }
        }
        Suite::Tightness => {
            if let Some(b2) = p.k {
                if p.n.map(|n| b2 > n).unwrap_or(b2 > 8) {
                    return params_err(format!("tightness needs b2 (passed as k) <= n, got {b2}"));
                }
            }
        }
        Suite::Conjecture15Probe => {
            if let Some(n) = p.n {
                if n <= k || n >= 5 * k + 2 {
                    return params_err(format!("the probe samples the open range k < n < 5k+2, got k={k}, n={n}"));
                }
            }
        }
        _ => {}
    }
    Ok(())
}

/// (n, k) fallbacks used when the caller leaves them unset; suites that draw
/// a fresh value per index ignore the table entry.
fn suite_defaults(suite: Suite) -> (usize, usize) {
    match suite {
        Suite::Theorem12 => (5, 1),
        Suite::Theorem14 => (12, 2),
        Suite::Factor => (4, 1),
        Suite::Lemma23 => (3, 2),
        Suite::Lemma24 => (4, 1),
        Suite::Lemma31 => (4, 2),
        Suite::Lemma32 => (4, 2),
        Suite::Lemma33 => (5, 2),
        Suite::Prop25 | Suite::Prop26 => (1, 1),
        Suite::Tightness => (8, 1),
        Suite::Conjecture15Probe => (11, 2),
    }
}

// ===== shared draws =========================================================

const MAX_DRAWS: usize = 400;

fn starved() -> Outcome {
    Outcome::Unknown {
        spec: None,
        detail: None,
        reason: format!("no admissible instance in {MAX_DRAWS} draws"),
    }
}

fn draw_filled_graph(
    rng: &mut ChaCha8Rng,
    sizes: [usize; 3],
    fill_pct: usize,
) -> (ConstructionSpec, TripartiteGraph) {
    let caps = [sizes[0] * sizes[1], sizes[0] * sizes[2], sizes[1] * sizes[2]];
    let mut edges = [0usize; 3];
    for (e, cap) in edges.iter_mut().zip(caps) {
        *e = rng.random_range(cap * fill_pct / 100..=cap);
    }
    let seed = rng.random::<u64>();
    (random_spec(sizes, edges, seed), random_tripartite(sizes, edges, seed).expect("counts in range"))
}

/// AB and AC filled high, BC within ±2 edges of the equality manifold of the
/// first shifted inequality, `gamma = 1 - beta*(alpha - (k-1)/n)`.
fn draw_near_boundary(rng: &mut ChaCha8Rng, n: usize, k: usize) -> (ConstructionSpec, TripartiteGraph) {
    let cap = n * n;
    let e_ab = rng.random_range(cap * 60 / 100..=cap);
    let e_ac = rng.random_range(cap * 60 / 100..=cap);
    let (alpha, beta) = (e_ab as f64 / cap as f64, e_ac as f64 / cap as f64);
    let target = (1.0 - beta * (alpha - (k as f64 - 1.0) / n as f64)) * cap as f64;
    let e_bc = (target.ceil() as i64 + rng.random_range(-2i64..=2)).clamp(0, cap as i64) as usize;
    let sizes = [n, n, n];
    let edges = [e_ab, e_ac, e_bc];
    let seed = rng.random::<u64>();
    (random_spec(sizes, edges, seed), random_tripartite(sizes, edges, seed).expect("counts in range"))
}

/// `outer * (inner - shift) + add - 1`.
fn shifted_slack(outer: &Rat, inner: &Rat, add: &Rat, shift: &Rat) -> Rat {
    outer.clone() * (inner.clone() - shift.clone()) + add.clone() - one()
}

fn disjoint_triangles_valid(g: &TripartiteGraph, tris: &[Triangle]) -> bool {
    let [na, nb, nc] = g.part_sizes();
    let mut used = [vec![false; na], vec![false; nb], vec![false; nc]];
    tris.iter().all(|t| {
        g.is_triangle(t)
            && [(0, t.a), (1, t.b), (2, t.c)].into_iter().all(|(part, v)| {
                let fresh = !used[part][v];
                used[part][v] = true;
                fresh
            })
    })
}

// ===== suite bodies =========================================================

/// Cyclic densities must force at least one triangle.
fn theorem12_single(p: &SweepParams, rng: &mut ChaCha8Rng, budget: &Budget) -> Outcome {
    let n = p.n.unwrap_or(5);
    for _ in 0..MAX_DRAWS {
        let (spec, g) = if p.boundary_bias {
            draw_near_boundary(rng, n, 1)
        } else {
            draw_filled_graph(rng, [n, n, n], 60)
        };
        if !is_cyclic(&g.densities()) {
            continue;
        }
        let r = max_triangle_packing(&g, budget);
        if r.size >= 1 {
            return Outcome::Pass;
        }
        if !r.proven_optimal {
            return Outcome::Unknown { spec: Some(spec), detail: None, reason: "node budget exhausted".into() };
        }
        return Outcome::Violation {
            spec: Some(spec),
            detail: None,
            observed: "no triangle".into(),
            expected: "at least one triangle under cyclic densities".into(),
        };
    }
    starved()
}

/// (k,n)-cyclic densities must force k vertex-disjoint triangles.
fn theorem14_single(p: &SweepParams, rng: &mut ChaCha8Rng, budget: &Budget) -> Outcome {
    let n = p.n.unwrap_or(12);
    let k = p.k.unwrap_or(2);
    for _ in 0..MAX_DRAWS {
        let (spec, g) = if p.boundary_bias {
            draw_near_boundary(rng, n, k)
        } else {
            draw_filled_graph(rng, [n, n, n], 80)
        };
        if !is_kn_cyclic(&g.densities(), k, n).expect("validated k <= n").satisfied {
            continue;
        }
        return match find_k_disjoint(&g, k, budget) {
            KPackingOutcome::Found(r) if disjoint_triangles_valid(&g, &r.triangles) => Outcome::Pass,
            KPackingOutcome::Found(_) => Outcome::Violation {
                spec: Some(spec),
                detail: None,
                observed: "solver returned an invalid certificate".into(),
                expected: format!("{k} vertex-disjoint triangles"),
            },
            KPackingOutcome::NotFound => Outcome::Violation {
                spec: Some(spec),
                detail: None,
                observed: format!("maximum packing below {k}"),
                expected: format!("{k} vertex-disjoint triangles under the (k,n)-cyclic condition"),
            },
            KPackingOutcome::Unknown => Outcome::Unknown {
                spec: Some(spec),
                detail: None,
                reason: "node budget exhausted".into(),
            },
        };
    }
    starved()
}

/// The integer surplus condition must force a triangle-factor.
fn factor_single(p: &SweepParams, rng: &mut ChaCha8Rng, budget: &Budget) -> Outcome {
    let n = p.n.unwrap_or(4);
    for _ in 0..MAX_DRAWS {
        let (spec, g) = if p.boundary_bias {
            draw_near_factor_boundary(rng, n)
        } else {
            draw_filled_graph(rng, [n, n, n], 90)
        };
        if !factor_condition(&g).expect("balanced by construction").satisfied {
            continue;
        }
        let r = triangle_factor_exact(&g, budget).expect("balanced by construction");
        return match r.status {
            FactorStatus::FactorFound if disjoint_triangles_valid(&g, &r.triangles) && r.triangles.len() == n => {
                Outcome::Pass
            }
            FactorStatus::FactorFound => Outcome::Violation {
                spec: Some(spec),
                detail: None,
                observed: "solver returned an invalid certificate".into(),
                expected: "a triangle-factor".into(),
            },
            FactorStatus::NoFactor => Outcome::Violation {
                spec: Some(spec),
                detail: None,
                observed: "no triangle-factor".into(),
                expected: "a triangle-factor under the surplus condition".into(),
            },
            FactorStatus::Unknown => Outcome::Unknown {
                spec: Some(spec),
                detail: None,
                reason: "node budget exhausted".into(),
            },
        };
    }
    starved()
}

/// AB and AC filled high, BC within ±2 edges of the equality manifold of the
/// first surplus inequality, `s_ab * s_ac + s_bc = n`.
fn draw_near_factor_boundary(rng: &mut ChaCha8Rng, n: usize) -> (ConstructionSpec, TripartiteGraph) {
    let cap = n * n;
    let base = (n * (n - 1)) as i64;
    let e_ab = rng.random_range(cap * 90 / 100..=cap);
    let e_ac = rng.random_range(cap * 90 / 100..=cap);
    let (s_ab, s_ac) = (e_ab as i64 - base, e_ac as i64 - base);
    let target = base + n as i64 - s_ab * s_ac;
    let e_bc = (target + rng.random_range(-2i64..=2)).clamp(0, cap as i64) as usize;
    let sizes = [n, n, n];
    let edges = [e_ab, e_ac, e_bc];
    let seed = rng.random::<u64>();
    (random_spec(sizes, edges, seed), random_tripartite(sizes, edges, seed).expect("counts in range"))
}

/// Hypergraphs with (k-1)n² + 1 edges must have a matching of size k.
fn lemma23_single(p: &SweepParams, rng: &mut ChaCha8Rng, budget: &Budget) -> Outcome {
    let n = p.n.unwrap_or(3);
    let k = p.k.unwrap_or(2);
    let m = (k - 1) * n * n + 1;
    let seed = rng.random::<u64>();
    let spec = random_hypergraph_spec(n, m, seed);
    let h = random_hypergraph(n, m, seed).expect("m <= n^3 whenever k <= n");
    let r = hypergraph_max_matching(&h, budget);
    if r.size >= k {
        return Outcome::Pass;
    }
    if !r.proven_optimal {
        return Outcome::Unknown { spec: Some(spec), detail: None, reason: "node budget exhausted".into() };
    }
    Outcome::Violation {
        spec: Some(spec),
        detail: None,
        observed: format!("matching number {}", r.size),
        expected: format!("matching number at least {k} with {m} edges"),
    }
}

/// The isolating deletion set must kill every triangle except the chosen one
/// using at most two edges per pair and none of the triangle's own.
fn lemma24_single(p: &SweepParams, rng: &mut ChaCha8Rng) -> Outcome {
    let n = p.n.unwrap_or(4);
    for _ in 0..MAX_DRAWS {
        let sizes = [n, n, n];
        let caps = [n * n, n * n, n * n];
        let mut edges = [0usize; 3];
        for (e, cap) in edges.iter_mut().zip(caps) {
            *e = rng.random_range(2..=(2 * cap / 5).max(2));
        }
        let seed = rng.random::<u64>();
        let spec = random_spec(sizes, edges, seed);
        let g = random_tripartite(sizes, edges, seed).expect("counts in range");
        let tris = g.triangles();
        if tris.is_empty() {
            continue;
        }
        let t = tris[rng.random_range(0..tris.len())];
        let e0 = match lemma24_deletion_set(&g, &t) {
            Ok(e0) => e0,
            Err(IsolationError::PreconditionUnverified) => {
                return Outcome::Unknown { spec: Some(spec), detail: None, reason: "node budget exhausted".into() }
            }
            Err(_) => continue, // preconditions fail: redraw
        };
        let detail = json!({ "triangle": t, "deleted": e0 }).to_string();
        let per_pair_ok =
            PairTag::ALL.iter().all(|&pair| e0.iter().filter(|e| e.pair == pair).count() <= 2);
        let te = triangle_edges(&t);
        let avoids_t = e0.iter().all(|e| !te.contains(e));
        let mut all = e0.clone();
        all.extend(te);
        let clean = g.remove_edges(&all).expect("edges present").triangle_count() == 0;
        if per_pair_ok && avoids_t && clean {
            return Outcome::Pass;
        }
        return Outcome::Violation {
            spec: Some(spec),
            detail: Some(detail),
            observed: format!(
                "per-pair bound {} / avoids own edges {} / triangle-free after {}",
                per_pair_ok, avoids_t, clean
            ),
            expected: "at most 2 edges per pair, none of the triangle's, no surviving triangle".into(),
        };
    }
    starved()
}

/// Deleting below k vertices from the two non-anchor parts preserves both
/// shifted inequalities with the shift tightened to (k-1-|S|).
fn lemma31_single(p: &SweepParams, rng: &mut ChaCha8Rng) -> Outcome {
    let n = p.n.unwrap_or(4);
    let k = p.k.unwrap_or(2);
    for _ in 0..MAX_DRAWS {
        let nu = n + rng.random_range(0..=2);
        let nv = n + rng.random_range(0..=2);
        let nw = n + rng.random_range(0..=2);
        let (spec, g) = draw_filled_graph(rng, [nu, nv, nw], 75);
        let d = g.densities();
        let hyp = is_positive(&shifted_slack(&d.beta, &d.alpha, &d.gamma, &ratio(k as i64 - 1, nv as i64)))
            && is_positive(&shifted_slack(&d.alpha, &d.beta, &d.gamma, &ratio(k as i64 - 1, nw as i64)));
        if !hyp {
            continue;
        }
        let t = rng.random_range(0..k);
        let (mut drop_v, mut drop_w) = (Vec::new(), Vec::new());
        for idx in rand::seq::index::sample(rng, nv + nw, t) {
            if idx < nv {
                drop_v.push(idx);
            } else {
                drop_w.push(idx - nv);
            }
        }
        let detail = json!({ "k": k, "deleted_from_v": drop_v, "deleted_from_w": drop_w }).to_string();
        let g2 = g.remove_vertices(&[], &drop_v, &drop_w).expect("indices in range");
        let d2 = g2.densities();
        let [_, nv2, nw2] = g2.part_sizes();
        let left = (k - 1 - t) as i64;
        let ok = is_positive(&shifted_slack(&d2.beta, &d2.alpha, &d2.gamma, &ratio(left, nv2 as i64)))
            && is_positive(&shifted_slack(&d2.alpha, &d2.beta, &d2.gamma, &ratio(left, nw2 as i64)));
        if ok {
            return Outcome::Pass;
        }
        return Outcome::Violation {
            spec: Some(spec),
            detail: Some(detail),
            observed: "a shifted inequality failed after the deletion".into(),
            expected: "both inequalities survive with shift (k-1-|S|)".into(),
        };
    }
    starved()
}

/// Deleting up to k vertices from the large part preserves both shifted
/// inequalities with shift (k-|S|); the BC density is untouched.
fn lemma32_single(p: &SweepParams, rng: &mut ChaCha8Rng) -> Outcome {
    let n = p.n.unwrap_or(4);
    let k = p.k.unwrap_or(2);
    for _ in 0..MAX_DRAWS {
        let nb = n + rng.random_range(0..=2);
        let nc = n + rng.random_range(0..=2);
        let na = nb.max(nc) + rng.random_range(0..=2);
        let (spec, g) = draw_filled_graph(rng, [na, nb, nc], 80);
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
        let drop_a: Vec<usize> = rand::seq::index::sample(rng, na, t).into_iter().collect();
        let detail = json!({ "k": k, "deleted_from_a": drop_a }).to_string();
        let g2 = g.remove_vertices(&drop_a, &[], &[]).expect("indices in range");
        let d2 = g2.densities();
        debug_assert_eq!(d2.gamma, d.gamma);
        let left = (k - t) as i64;
        let ok = is_positive(&shifted_slack(&d2.beta, &d2.alpha, &d2.gamma, &ratio(left, nb as i64)))
            && is_positive(&shifted_slack(&d2.alpha, &d2.beta, &d2.gamma, &ratio(left, nc as i64)));
        if ok {
            return Outcome::Pass;
        }
        return Outcome::Violation {
            spec: Some(spec),
            detail: Some(detail),
            observed: "a shifted inequality failed after the deletion".into(),
            expected: "both inequalities survive with shift (k-|S|)".into(),
        };
    }
    starved()
}

/// Deleting below k vertices anywhere in a balanced (k,n)-cyclic graph
/// preserves the leading inequality pair when the deleted graph's smallest
/// density sits on the BC block.
fn lemma33_single(p: &SweepParams, rng: &mut ChaCha8Rng) -> Outcome {
    let n = p.n.unwrap_or(5);
    let k = p.k.unwrap_or(2);
    for _ in 0..MAX_DRAWS {
        let (spec, g) = draw_filled_graph(rng, [n, n, n], 85);
        let d = g.densities();
        if !is_kn_cyclic(&d, k, n).expect("validated k <= n").satisfied {
            continue;
        }
        let t = rng.random_range(0..k);
        let (mut drop_a, mut drop_b, mut drop_c) = (Vec::new(), Vec::new(), Vec::new());
        for idx in rand::seq::index::sample(rng, 3 * n, t) {
            match idx / n {
                0 => drop_a.push(idx % n),
                1 => drop_b.push(idx % n),
                _ => drop_c.push(idx % n),
            }
        }
        let g2 = g.remove_vertices(&drop_a, &drop_b, &drop_c).expect("indices in range");
        let d2 = g2.densities();
        let (lam, eta, mu) = (&d2.alpha, &d2.beta, &d2.gamma);
        if mu > lam || mu > eta {
            continue; // the lemma's labeling needs the BC block minimal
        }
        let detail =
            json!({ "k": k, "deleted_from_a": drop_a, "deleted_from_b": drop_b, "deleted_from_c": drop_c })
                .to_string();
        let [_, nb2, nc2] = g2.part_sizes();
        let left = (k - 1 - t) as i64;
        let ok = is_positive(&shifted_slack(lam, eta, mu, &ratio(left, nc2 as i64)))
            && is_positive(&shifted_slack(eta, lam, mu, &ratio(left, nb2 as i64)));
        if ok {
            return Outcome::Pass;
        }
        return Outcome::Violation {
            spec: Some(spec),
            detail: Some(detail),
            observed: "a shifted inequality failed after the deletion".into(),
            expected: "the leading pair survives with shift (k-1-|V0|)".into(),
        };
    }
    starved()
}

/// Under 1 >= alpha, beta >= gamma >= 0, the first inequality pair implies
/// the other four.
fn prop25_single(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..MAX_DRAWS {
        let den = rng.random_range(2i64..=60);
        let mut vals = [0i64; 3];
        for v in vals.iter_mut() {
            *v = rng.random_range(den * 55 / 100..=den);
        }
        vals.sort_unstable();
        let triple = DensityTriple::new(ratio(vals[1], den), ratio(vals[2], den), ratio(vals[0], den));
        let n = rng.random_range(2..=30);
        let k = rng.random_range(1..=4.min(n));
        let v = is_kn_cyclic(&triple, k, n).expect("k <= n by construction");
        if !(is_positive(&v.slacks[0]) && is_positive(&v.slacks[1])) {
            continue;
        }
        if v.slacks[2..].iter().all(is_positive) {
            return Outcome::Pass;
        }
        return Outcome::Violation {
            spec: None,
            detail: Some(
                json!({
                    "alpha": triple.alpha.to_string(),
                    "beta": triple.beta.to_string(),
                    "gamma": triple.gamma.to_string(),
                    "k": k,
                    "n": n,
                })
                .to_string(),
            ),
            observed: "a later inequality failed".into(),
            expected: "the first pair implies the remaining four".into(),
        };
    }
    starved()
}

/// The direct and scaled forms of the six-inequality system agree.
fn prop26_single(rng: &mut ChaCha8Rng) -> Outcome {
    let den = rng.random_range(1i64..=60);
    let mut vals = [0i64; 3];
    for v in vals.iter_mut() {
        *v = rng.random_range(0..=den);
    }
    let triple = DensityTriple::new(ratio(vals[0], den), ratio(vals[1], den), ratio(vals[2], den));
    let n = rng.random_range(1..=30);
    let k = rng.random_range(1..=n);
    let direct = is_kn_cyclic(&triple, k, n).expect("k <= n by construction").satisfied;
    let scaled = is_kn_cyclic_scaled(&triple, k, n).expect("k <= n by construction");
    if direct == scaled {
        return Outcome::Pass;
    }
    Outcome::Violation {
        spec: None,
        detail: Some(
            json!({
                "alpha": triple.alpha.to_string(),
                "beta": triple.beta.to_string(),
                "gamma": triple.gamma.to_string(),
                "k": k,
                "n": n,
            })
            .to_string(),
        ),
        observed: format!("direct form {direct}, scaled form {scaled}"),
        expected: "both forms agree".into(),
    }
}

/// The blocked extremal construction sits exactly on the first inequality's
/// boundary and its maximum packing is exactly b2.
fn tightness_single(p: &SweepParams, rng: &mut ChaCha8Rng, budget: &Budget) -> Outcome {
    let n = p.n.unwrap_or_else(|| rng.random_range(8..=14));
    let b2 = p.k.unwrap_or_else(|| rng.random_range(1..=2));
    let b1 = rng.random_range(0..=n - b2);
    let c1 = rng.random_range(b2..=n);
    let spec = ConstructionSpec::ExtremalPacking { n, b1, b2, c1 };
    let g = extremal_packing(n, b1, b2, c1).expect("parameters in range");
    let v = is_kn_cyclic(&g.densities(), b2 + 1, n).expect("b2 + 1 <= n");
    if !is_zero(&v.slacks[0]) {
        return Outcome::Violation {
            spec: Some(spec),
            detail: None,
            observed: format!("first slack {}", v.slacks[0]),
            expected: "first slack exactly zero".into(),
        };
    }
    let r = max_triangle_packing(&g, budget);
    if !r.proven_optimal {
        return Outcome::Unknown { spec: Some(spec), detail: None, reason: "node budget exhausted".into() };
    }
    if r.size == b2 {
        return Outcome::Pass;
    }
    Outcome::Violation {
        spec: Some(spec),
        detail: None,
        observed: format!("maximum packing {}", r.size),
        expected: format!("maximum packing exactly {b2}"),
    }
}

/// Probes the gap k < n < 5k+2 that the packing theorem leaves open: a
/// (k,n)-cyclic instance there without k disjoint triangles bounds how far
/// the size condition could be relaxed. Finds are recorded as violations
/// (exit code 1) without aborting the sweep.
fn probe_single(p: &SweepParams, rng: &mut ChaCha8Rng, budget: &Budget) -> Outcome {
    let k = p.k.unwrap_or(2);
    let n = p.n.unwrap_or_else(|| rng.random_range(k + 1..=5 * k + 1));
    for _ in 0..MAX_DRAWS {
        let (spec, g) = if p.boundary_bias {
            draw_near_boundary(rng, n, k)
        } else {
            draw_filled_graph(rng, [n, n, n], 75)
        };
        if !is_kn_cyclic(&g.densities(), k, n).expect("n > k in the probe range").satisfied {
            continue;
        }
        return match find_k_disjoint(&g, k, budget) {
            KPackingOutcome::Found(_) => Outcome::Pass,
            KPackingOutcome::NotFound => Outcome::Violation {
                spec: Some(spec),
                detail: None,
                observed: format!("(k,n)-cyclic at n={n} without {k} disjoint triangles"),
                expected: format!("counterexample candidate for relaxing n >= 5k+2 = {}", 5 * k + 2),
            },
            KPackingOutcome::Unknown => Outcome::Unknown {
                spec: Some(spec),
                detail: None,
                reason: "node budget exhausted".into(),
            },
        };
    }
    starved()
}

// ===== curve emission =======================================================

/// What `emit_curves` found, for the caller to print.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveSummary {
    pub rows: usize,
    /// Largest deviation of any of the three curves from tau at c = 0.
    pub endpoint_gap_at_zero: f64,
    /// Largest deviation of any of the three curves from 1 at c = 1.
    pub endpoint_gap_at_one: f64,
    pub interior_ordered: usize,
    pub interior_total: usize,
}

/// Writes the curve table as CSV and checks the endpoint coincidences and
/// the row ordering tau_c <= linear <= hypergraph bound.
pub fn emit_curves(resolution: usize, path: &Path) -> Result<CurveSummary, CliError> {
    if resolution < 2 {
        return params_err(format!("resolution must be at least 2, got {resolution}"));
    }
    let rows = curve_table(resolution);
    std::fs::write(path, curve_csv(&rows))?;
    let t = tau();
    let first = &rows[0];
    let last = &rows[rows.len() - 1];
    let gap0 = (first.tau_c - t).abs().max((first.linear - t).abs()).max((first.hyper - t).abs());
    let gap1 =
        (last.tau_c - 1.0).abs().max((last.linear - 1.0).abs()).max((last.hyper - 1.0).abs());
    let interior = &rows[1..rows.len() - 1];
    let ordered = interior.iter().filter(|r| r.tau_c <= r.linear && r.linear <= r.hyper).count();
    Ok(CurveSummary {
        rows: rows.len(),
        endpoint_gap_at_zero: gap0,
        endpoint_gap_at_one: gap1,
        interior_ordered: ordered,
        interior_total: interior.len(),
    })
}
