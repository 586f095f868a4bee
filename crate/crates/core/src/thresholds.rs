//! Density predicates and closed-form thresholds: the cyclic and k-triangle
//! inequality systems (direct and scaled forms), the common-density roots
//! tau_k and tau_c, the region split driving the minimum-triangle-count
//! formulas, the integer surplus form of the triangle-factor condition, and
//! the comparison curve table.
//!
//! Predicates are decided in exact rationals; only roots and curve values
//! are floats.

use crate::graph::{DensityTriple, TripartiteGraph};
use crate::rat::{int, is_positive, ratio, to_f64, Rat};
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ThresholdError {
    #[error("k must satisfy 1 <= k <= n, got k = {k}, n = {n}")]
    InvalidK { k: usize, n: usize },
    #[error("argument must lie in [0, 1], got {value}")]
    OutOfUnitInterval { value: f64 },
    #[error("density triple lies outside the cyclic region")]
    OutsideRegion,
    #[error("operation requires a balanced graph, got part sizes {sizes:?}")]
    Unbalanced { sizes: [usize; 3] },
}

// ===== cyclic predicates ===================================================

/// The six inequality left-hand sides share one shape,
/// `outer * (inner - shift) + add`, where (outer, inner, add) runs over the
/// role triples below in fixed order. Slots (0,1) form the first inequality
/// pair, (2,3) the second, (4,5) the third.
fn role_triples(t: &DensityTriple) -> [(&Rat, &Rat, &Rat); 6] {
    let DensityTriple { alpha, beta, gamma } = t;
    [
        (beta, alpha, gamma),
        (alpha, beta, gamma),
        (gamma, alpha, beta),
        (alpha, gamma, beta),
        (gamma, beta, alpha),
        (beta, gamma, alpha),
    ]
}

/// True iff all three products `alpha*beta + gamma` (cyclically) strictly
/// exceed 1. Exact.
pub fn is_cyclic(t: &DensityTriple) -> bool {
    let one = int(1);
    let DensityTriple { alpha, beta, gamma } = t;
    alpha.clone() * beta.clone() + gamma.clone() > one
        && beta.clone() * gamma.clone() + alpha.clone() > one
        && gamma.clone() * alpha.clone() + beta.clone() > one
}

/// Verdict on the six-inequality system for k disjoint triangles at part
/// size n. Slacks are the exact left-hand sides minus 1, in fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicVerdict {
    pub k: usize,
    pub n: usize,
    pub triple: DensityTriple,
    pub slacks: [Rat; 6],
    pub satisfied: bool,
}

pub fn is_kn_cyclic(t: &DensityTriple, k: usize, n: usize) -> Result<CyclicVerdict, ThresholdError> {
    if k < 1 || k > n {
        return Err(ThresholdError::InvalidK { k, n });
    }
    let shift = ratio(k as i64 - 1, n as i64);
    let one = int(1);
    let slacks: [Rat; 6] = role_triples(t)
        .map(|(outer, inner, add)| outer.clone() * (inner.clone() - shift.clone()) + add.clone() - one.clone());
    let satisfied = slacks.iter().all(is_positive);
    Ok(CyclicVerdict { k, n, triple: t.clone(), slacks, satisfied })
}

/// Same system in the scaled form: each inequality becomes
/// `outer * (inner*n - (k-1)) / (n-(k-1)) + (add*n - (k-1)) / (n-(k-1)) > 1`.
/// Agrees with `is_kn_cyclic` on every input.
pub fn is_kn_cyclic_scaled(t: &DensityTriple, k: usize, n: usize) -> Result<bool, ThresholdError> {
    if k < 1 || k > n {
        return Err(ThresholdError::InvalidK { k, n });
    }
    let nn = int(n as i64);
    let km1 = int(k as i64 - 1);
    let denom = nn.clone() - km1.clone();
    if !is_positive(&denom) {
        return Err(ThresholdError::InvalidK { k, n });
    }
    let one = int(1);
    Ok(role_triples(t).iter().all(|(outer, inner, add)| {
        let scaled_inner = ((*inner).clone() * nn.clone() - km1.clone()) / denom.clone();
        let scaled_add = ((*add).clone() * nn.clone() - km1.clone()) / denom.clone();
        (*outer).clone() * scaled_inner + scaled_add > one
    }))
}

// ===== common-density roots ================================================

/// Golden-ratio conjugate, the one-triangle common-density threshold.
pub fn tau() -> f64 {
    (5.0_f64.sqrt() - 1.0) / 2.0
}

/// Positive root of n x^2 + (n+1-k) x - n = 0. Uses the subtraction-free
/// quadratic form, so accuracy is well within 1e-12.
pub fn tau_k(n: u64, k: u64) -> Result<f64, ThresholdError> {
    if k < 1 || k > n {
        return Err(ThresholdError::InvalidK { k: k as usize, n: n as usize });
    }
    let nf = n as f64;
    let b = nf + 1.0 - k as f64;
    Ok(2.0 * nf / (b + (b * b + 4.0 * nf * nf).sqrt()))
}

/// Common-density threshold for a triangle-factor of a c-fraction:
/// (c + sqrt((1-c)^2 + 4) - 1) / 2.
pub fn tau_c(c: f64) -> Result<f64, ThresholdError> {
    if !(0.0..=1.0).contains(&c) {
        return Err(ThresholdError::OutOfUnitInterval { value: c });
    }
    Ok((c + ((1.0 - c) * (1.0 - c) + 4.0).sqrt() - 1.0) / 2.0)
}

// ===== region split and minimum triangle count =============================

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    R1,
    R2,
    OutsideR,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionClass {
    pub delta: Rat,
    pub region: Region,
}

/// Exact discriminant a^2+b^2+g^2-2ab-2ag-2bg+4abg deciding which
/// minimum-count formula applies inside the cyclic region.
pub fn delta(t: &DensityTriple) -> Rat {
    let DensityTriple { alpha: a, beta: b, gamma: g } = t;
    let two = int(2);
    let four = int(4);
    a.clone() * a.clone() + b.clone() * b.clone() + g.clone() * g.clone()
        - two.clone() * a.clone() * b.clone()
        - two.clone() * a.clone() * g.clone()
        - two * b.clone() * g.clone()
        + four * a.clone() * b.clone() * g.clone()
}

pub fn classify_region(t: &DensityTriple) -> RegionClass {
    let d = delta(t);
    let region = if !is_cyclic(t) {
        Region::OutsideR
    } else if !d.is_negative() {
        Region::R1
    } else {
        Region::R2
    };
    RegionClass { delta: d, region }
}

/// Lower bound on triangle count / n^3 at the given densities. Proven in
/// R1; in R2 the closed form is only conjectured to be attained, so the
/// value carries a flag.
#[derive(Clone, Debug, PartialEq)]
pub struct TminBound {
    pub value: f64,
    pub is_conjectural: bool,
    pub region: RegionClass,
}

pub fn tmin_lower_bound(t: &DensityTriple) -> Result<TminBound, ThresholdError> {
    let class = classify_region(t);
    match class.region {
        Region::OutsideR => Err(ThresholdError::OutsideRegion),
        Region::R1 => {
            let sum = t.alpha.clone() + t.beta.clone() + t.gamma.clone() - int(2);
            Ok(TminBound { value: to_f64(&sum), is_conjectural: false, region: class })
        }
        Region::R2 => {
            let (a, b, g) = (to_f64(&t.alpha), to_f64(&t.beta), to_f64(&t.gamma));
            let value = 2.0 * (a * b * (1.0 - g)).sqrt() + 2.0 * g - 2.0;
            Ok(TminBound { value, is_conjectural: true, region: class })
        }
    }
}

// ===== triangle-factor condition ===========================================

/// Integer surpluses e_xy - n(n-1) of a balanced graph. The factor condition
/// is exact in these: s_xy * s_xz + s_yz > n per rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorSurplus {
    pub n: i64,
    pub s_ab: i64,
    pub s_ac: i64,
    pub s_bc: i64,
}

pub fn factor_surplus(g: &TripartiteGraph) -> Result<FactorSurplus, ThresholdError> {
    let n = g
        .balanced_n()
        .ok_or(ThresholdError::Unbalanced { sizes: g.part_sizes() })? as i64;
    let [eab, eac, ebc] = g.edge_counts();
    let base = n * (n - 1);
    Ok(FactorSurplus {
        n,
        s_ab: eab as i64 - base,
        s_ac: eac as i64 - base,
        s_bc: ebc as i64 - base,
    })
}

/// Verdict with the three exact rotation slacks (LHS - n), in order
/// (ab,ac|bc), (ab,bc|ac), (ac,bc|ab).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorVerdict {
    pub surplus: FactorSurplus,
    pub slacks: [i128; 3],
    pub satisfied: bool,
}

pub fn factor_condition_from_surplus(s: &FactorSurplus) -> FactorVerdict {
    let (ab, ac, bc, n) = (s.s_ab as i128, s.s_ac as i128, s.s_bc as i128, s.n as i128);
    let slacks = [ab * ac + bc - n, ab * bc + ac - n, ac * bc + ab - n];
    FactorVerdict { surplus: *s, slacks, satisfied: slacks.iter().all(|&x| x > 0) }
}

pub fn factor_condition(g: &TripartiteGraph) -> Result<FactorVerdict, ThresholdError> {
    Ok(factor_condition_from_surplus(&factor_surplus(g)?))
}

// ===== comparison curves ===================================================

/// Minimum normalized triangle count at common density d: the proven linear
/// form at and above 3/4, the conjectured form below.
fn common_density_tmin(d: f64) -> f64 {
    if d >= 0.75 {
        3.0 * d - 2.0
    } else {
        2.0 * d * (1.0 - d).sqrt() + 2.0 * d - 2.0
    }
}

/// Least common density whose guaranteed triangle count reaches a
/// c-fraction of a factor, plus whether the conjectured formula decided it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypergraphBound {
    pub density: f64,
    pub conjectural: bool,
}

/// Bisection to 1e-9 on (tau, 1]; the objective is strictly increasing
/// there (see the `objective_is_monotone` test).
pub fn hypergraph_bound(c: f64) -> HypergraphBound {
    debug_assert!((0.0..=1.0).contains(&c));
    let mut lo = tau();
    let mut hi = 1.0_f64;
    if common_density_tmin(lo) >= c {
        return HypergraphBound { density: lo, conjectural: lo < 0.75 };
    }
    if common_density_tmin(hi) <= c {
        return HypergraphBound { density: hi, conjectural: false };
    }
    for _ in 0..100 {
        if hi - lo < 1e-9 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if common_density_tmin(mid) >= c {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    HypergraphBound { density: hi, conjectural: hi < 0.75 }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveRow {
    pub c: f64,
    pub tau_c: f64,
    pub linear: f64,
    pub hyper: f64,
}

/// resolution+1 rows at c = i/resolution: tau_c, the chord tau + (1-tau) c,
/// and the density needed for the guaranteed-count route.
pub fn curve_table(resolution: usize) -> Vec<CurveRow> {
    assert!(resolution >= 2, "resolution must be at least 2");
    let t = tau();
    (0..=resolution)
        .map(|i| {
            let c = i as f64 / resolution as f64;
            CurveRow {
                c,
                tau_c: tau_c(c).expect("grid point lies in [0,1]"),
                linear: t + (1.0 - t) * c,
                hyper: hypergraph_bound(c).density,
            }
        })
        .collect()
}

/// CSV with fixed header and 9 decimal digits per value.
pub fn curve_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("c,tau_c,linear,hypergraph_bound\n");
    for r in rows {
        out.push_str(&format!("{:.9},{:.9},{:.9},{:.9}\n", r.c, r.tau_c, r.linear, r.hyper));
    }
    out
}
