//! `tripack`: generate, inspect, solve, and sweep tripartite triangle
//! instances from the command line.
//!
//! Exit codes: 0 = success / clean sweep, 1 = sweep found violations,
//! 2 = usage error, 3 = every sweep instance exhausted its budget.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use tripack_cli::{emit_curves, run_sweep, Suite, SweepParams};
use tripack_core::codec::{
    decode_document, encode_hypergraph_with_provenance, encode_with_provenance, Document,
};
use tripack_core::constructions::{generate, ConstructionSpec, Generated};
use tripack_core::graph::TripartiteGraph;
use tripack_core::rat::to_f64;
use tripack_core::solvers::{
    find_k_disjoint, hypergraph_max_matching, max_triangle_packing, triangle_factor_exact, Budget,
};
use tripack_core::thresholds::{
    classify_region, factor_condition, is_cyclic, is_kn_cyclic, tau_c, tau_k, tmin_lower_bound,
    Region,
};

#[derive(Parser)]
#[command(name = "tripack", version, about = "Exact thresholds and solvers for triangle packings in tripartite graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance and write it as JSON with provenance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Print exact densities, threshold verdicts, and bounds for an instance file.
    Check {
        file: PathBuf,
        /// Packing target for the (k,n)-cyclic verdict on balanced graphs.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Run the exact solver on an instance file and print JSON to stdout.
    Solve {
        file: PathBuf,
        #[command(subcommand)]
        what: SolveKind,
    },
    /// Print the finite-n packing threshold (positive root of nx^2 + (n+1-k)x - n).
    Tau {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Print the limiting threshold for third-pair density c.
    Tauc {
        #[arg(long)]
        c: f64,
    },
    /// Write the threshold-curve table as CSV and print a consistency summary.
    Curves {
        #[arg(long)]
        resolution: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a randomized verification sweep and write a JSON report.
    Sweep {
        /// One of: theorem12, theorem14, factor, lemma23, lemma24, lemma31,
        /// lemma32, lemma33, prop25, prop26, tightness, conjecture15-probe.
        suite: String,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Worker threads; 0 means one per core.
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
        max_nodes: u64,
        /// Sample edge counts within ±2 of the governing equality manifold.
        #[arg(long)]
        boundary_bias: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Complete balanced tripartite graph on 3n vertices.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Packing-tight construction: maximum packing b2, first slack zero at k = b2+1.
    ExtremalPacking {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b1: usize,
        #[arg(long)]
        b2: usize,
        #[arg(long)]
        c1: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Factor-tight construction: first factor slack zero, no triangle-factor.
    ExtremalFactor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b1: usize,
        #[arg(long)]
        c1: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Uniform random balanced graph with exact per-pair edge counts.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eab: usize,
        #[arg(long)]
        eac: usize,
        #[arg(long)]
        ebc: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Hypergraph with (k-1)n^2 edges and matching number exactly k-1.
    TightHypergraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum SolveKind {
    /// Maximum vertex-disjoint triangle packing (or hypergraph matching).
    Packing {
        #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
        max_nodes: u64,
    },
    /// Decide whether k vertex-disjoint triangles exist.
    KPacking {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
        max_nodes: u64,
    },
    /// Decide whether a triangle-factor exists.
    Factor {
        #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
        max_nodes: u64,
    },
}

fn main() {
    // Die quietly when stdout's reader goes away (`tripack check … | head`)
    // instead of panicking mid-print; this restores the default pipe signal
    // that the Rust runtime masks.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Gen { kind } => gen(kind),
        Cmd::Check { file, k } => check(&file, k),
        Cmd::Solve { file, what } => solve(&file, what),
        Cmd::Tau { n, k } => {
            println!("{:.15}", tau_k(n, k).context("tau_k needs 1 <= k <= n")?);
            Ok(0)
        }
        Cmd::Tauc { c } => {
            println!("{:.15}", tau_c(c).context("tau_c needs c in [0, 1]")?);
            Ok(0)
        }
        Cmd::Curves { resolution, out } => {
            let s = emit_curves(resolution, &out)?;
            println!("wrote {} rows to {}", s.rows, out.display());
            println!(
                "endpoint gaps: {:.3e} at c=0, {:.3e} at c=1; ordering tau_c <= linear <= hypergraph holds on {}/{} interior rows",
                s.endpoint_gap_at_zero, s.endpoint_gap_at_one, s.interior_ordered, s.interior_total
            );
            Ok(0)
        }
        Cmd::Sweep { suite, samples, seed, n, k, parallelism, max_nodes, boundary_bias, out } => {
            let suite: Suite = suite.parse()?;
            let params = SweepParams { n, k, max_nodes, boundary_bias };
            let report = run_sweep(suite, &params, samples, seed, parallelism)?;
            std::fs::write(&out, serde_json::to_string_pretty(&report)?)
                .with_context(|| format!("writing {}", out.display()))?;
            println!(
                "suite {}: {} samples, {} violations, {} unknown, {} ms; report at {}",
                report.suite,
                report.samples,
                report.violations.len(),
                report.unknown.len(),
                report.elapsed_ms,
                out.display()
            );
            Ok(report.exit_code())
        }
    }
}

fn gen(kind: GenKind) -> Result<i32> {
    let (spec, out) = match kind {
        GenKind::Complete { n, out } => (ConstructionSpec::Complete { n }, out),
        GenKind::ExtremalPacking { n, b1, b2, c1, out } => {
            (ConstructionSpec::ExtremalPacking { n, b1, b2, c1 }, out)
        }
        GenKind::ExtremalFactor { n, b1, c1, out } => {
            (ConstructionSpec::ExtremalFactor { n, b1, c1 }, out)
        }
        GenKind::Random { n, eab, eac, ebc, seed, out } => (
            tripack_core::constructions::random_spec([n, n, n], [eab, eac, ebc], seed),
            out,
        ),
        GenKind::TightHypergraph { n, k, out } => (ConstructionSpec::TightHypergraph { n, k }, out),
    };
    let json = match generate(&spec)? {
        Generated::Graph(g) => {
            let [na, nb, nc] = g.part_sizes();
            let [eab, eac, ebc] = g.edge_counts();
            println!("graph: parts [{na}, {nb}, {nc}], edges [{eab}, {eac}, {ebc}]");
            encode_with_provenance(&g, &spec)
        }
        Generated::Hypergraph(h) => {
            println!("hypergraph: n = {}, edges = {}", h.n(), h.edge_count());
            encode_hypergraph_with_provenance(&h, &spec)
        }
    };
    std::fs::write(&out, json).with_context(|| format!("writing {}", out.display()))?;
    println!("wrote {}", out.display());
    Ok(0)
}

fn check(file: &PathBuf, k: usize) -> Result<i32> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    match decode_document(&text)? {
        Document::Graph(g, _) => check_graph(&g, k),
        Document::Hypergraph(h, _) => {
            println!("hypergraph: n = {}, edges = {}", h.n(), h.edge_count());
            Ok(0)
        }
    }
}

fn check_graph(g: &TripartiteGraph, k: usize) -> Result<i32> {
    let [na, nb, nc] = g.part_sizes();
    let [eab, eac, ebc] = g.edge_counts();
    println!("parts [{na}, {nb}, {nc}], edges [{eab}, {eac}, {ebc}]");
    let d = g.densities();
    println!("alpha = {} (~{:.6})  [AB]", d.alpha, to_f64(&d.alpha));
    println!("beta  = {} (~{:.6})  [AC]", d.beta, to_f64(&d.beta));
    println!("gamma = {} (~{:.6})  [BC]", d.gamma, to_f64(&d.gamma));
    println!("cyclic: {}", is_cyclic(&d));
    let rc = classify_region(&d);
    let region = match rc.region {
        Region::R1 => "R1 (additive bound proven)",
        Region::R2 => "R2 (square-root bound, conjectural)",
        Region::OutsideR => "outside the cyclic region",
    };
    println!("region: {region} (discriminant ~{:.6})", to_f64(&rc.delta));
    match tmin_lower_bound(&d) {
        Ok(b) => println!(
            "triangle-density lower bound: {:.6}{}",
            b.value,
            if b.is_conjectural { " (conjectural)" } else { "" }
        ),
        Err(_) => println!("triangle-density lower bound: n/a (outside the cyclic region)"),
    }
    match g.balanced_n() {
        Some(n) => {
            if k < 1 || k > n {
                bail!("check needs 1 <= k <= n = {n}, got k = {k}");
            }
            let v = is_kn_cyclic(&d, k, n).expect("bounds checked above");
            println!("({k},{n})-cyclic: {}", v.satisfied);
            let labels = [
                "beta *(alpha - s) + gamma",
                "alpha*(beta  - s) + gamma",
                "gamma*(alpha - s) + beta ",
                "alpha*(gamma - s) + beta ",
                "gamma*(beta  - s) + alpha",
                "beta *(gamma - s) + alpha",
            ];
            for (label, slack) in labels.iter().zip(&v.slacks) {
                println!("  slack of {label} - 1: {} (~{:+.6})", slack, to_f64(slack));
            }
            let f = factor_condition(g).expect("balanced");
            println!(
                "factor condition (surpluses {}, {}, {}): {}",
                f.surplus.s_ab, f.surplus.s_ac, f.surplus.s_bc, f.satisfied
            );
            for (label, slack) in
                ["s_ab*s_ac + s_bc - n", "s_ab*s_bc + s_ac - n", "s_ac*s_bc + s_ab - n"]
                    .iter()
                    .zip(&f.slacks)
            {
                println!("  {label} = {slack}");
            }
        }
        None => println!("(k,n)-cyclic / factor condition: skipped (parts are not balanced)"),
    }
    Ok(0)
}

fn solve(file: &PathBuf, what: SolveKind) -> Result<i32> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let doc = decode_document(&text)?;
    let json = match (doc, what) {
        (Document::Graph(g, _), SolveKind::Packing { max_nodes }) => {
            serde_json::to_string_pretty(&max_triangle_packing(&g, &Budget::nodes(max_nodes)))?
        }
        (Document::Graph(g, _), SolveKind::KPacking { k, max_nodes }) => {
            serde_json::to_string_pretty(&find_k_disjoint(&g, k, &Budget::nodes(max_nodes)))?
        }
        (Document::Graph(g, _), SolveKind::Factor { max_nodes }) => {
            serde_json::to_string_pretty(&triangle_factor_exact(&g, &Budget::nodes(max_nodes))?)?
        }
        (Document::Hypergraph(h, _), SolveKind::Packing { max_nodes }) => {
            serde_json::to_string_pretty(&hypergraph_max_matching(&h, &Budget::nodes(max_nodes)))?
        }
        (Document::Hypergraph(..), SolveKind::KPacking { .. }) => {
            bail!("k-packing applies to graph instances; this file holds a hypergraph")
        }
        (Document::Hypergraph(..), SolveKind::Factor { .. }) => {
            bail!("factor applies to graph instances; this file holds a hypergraph")
        }
    };
    println!("{json}");
    Ok(0)
}
