//! Exact maximum 3-set packing by branch and bound. One engine serves
//! triangle packing, early-exit k-packing, and hypergraph matching numbers:
//! branch on a free vertex in the fewest alive triples (one child per triple
//! through it, plus a vertex-unused child), prune with
//! current + min over parts of candidate vertices.

use super::Budget;
use crate::graph::{Triangle, TripartiteGraph, TripartiteHypergraph};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingResult {
    pub size: usize,
    pub triangles: Vec<Triangle>,
    pub proven_optimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KPackingOutcome {
    Found(PackingResult),
    NotFound,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphMatching {
    pub size: usize,
    pub triples: Vec<[usize; 3]>,
    pub proven_optimal: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Maximize,
    Target(usize),
}

struct Search<'a> {
    triples: &'a [[usize; 3]],
    offsets: [usize; 3],
    n_vertices: usize,
    /// Triple indices through each global vertex, ascending.
    vertex_triples: Vec<Vec<u32>>,
    /// Per triple: how many of its three vertices are dead (used or banned).
    dead_vertices: Vec<u8>,
    /// Per global vertex: number of alive triples through it.
    alive_deg: Vec<u32>,
    free: Vec<bool>,
    /// Per part: free vertices with alive_deg > 0; min over parts bounds
    /// how many disjoint triples can still be added.
    candidates: [usize; 3],
    chosen: Vec<u32>,
    best: Vec<u32>,
    goal: Goal,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(part_sizes: [usize; 3], triples: &'a [[usize; 3]], goal: Goal, budget: &Budget) -> Self {
        let offsets = [0, part_sizes[0], part_sizes[0] + part_sizes[1]];
        let n_vertices = part_sizes.iter().sum();
        let mut vertex_triples = vec![Vec::new(); n_vertices];
        let mut alive_deg = vec![0u32; n_vertices];
        for (t, triple) in triples.iter().enumerate() {
            for part in 0..3 {
                let v = offsets[part] + triple[part];
                vertex_triples[v].push(t as u32);
                alive_deg[v] += 1;
            }
        }
        let mut candidates = [0usize; 3];
        for part in 0..3 {
            candidates[part] = (0..part_sizes[part])
                .filter(|&i| alive_deg[offsets[part] + i] > 0)
                .count();
        }
        Search {
            triples,
            offsets,
            n_vertices,
            vertex_triples,
            dead_vertices: vec![0; triples.len()],
            alive_deg,
            free: vec![true; n_vertices],
            candidates,
            chosen: Vec::new(),
            best: Vec::new(),
            goal,
            nodes: 0,
            max_nodes: budget.max_nodes(),
            deadline: budget.max_millis().map(|ms| Instant::now() + Duration::from_millis(ms)),
            exhausted: false,
        }
    }

    fn part_of(&self, v: usize) -> usize {
        if v >= self.offsets[2] {
            2
        } else if v >= self.offsets[1] {
            1
        } else {
            0
        }
    }

    fn kill_vertex(&mut self, v: usize) {
        debug_assert!(self.free[v]);
        if self.alive_deg[v] > 0 {
            self.candidates[self.part_of(v)] -= 1;
        }
        self.free[v] = false;
        for idx in 0..self.vertex_triples[v].len() {
            let t = self.vertex_triples[v][idx] as usize;
            self.dead_vertices[t] += 1;
            if self.dead_vertices[t] == 1 {
                for part in 0..3 {
                    let w = self.offsets[part] + self.triples[t][part];
                    self.alive_deg[w] -= 1;
                    if self.alive_deg[w] == 0 && self.free[w] {
                        self.candidates[part] -= 1;
                    }
                }
            }
        }
    }

    fn revive_vertex(&mut self, v: usize) {
        debug_assert!(!self.free[v]);
        for idx in 0..self.vertex_triples[v].len() {
            let t = self.vertex_triples[v][idx] as usize;
            self.dead_vertices[t] -= 1;
            if self.dead_vertices[t] == 0 {
                for part in 0..3 {
                    let w = self.offsets[part] + self.triples[t][part];
                    self.alive_deg[w] += 1;
                    if self.alive_deg[w] == 1 && self.free[w] {
                        self.candidates[part] += 1;
                    }
                }
            }
        }
        self.free[v] = true;
        if self.alive_deg[v] > 0 {
            self.candidates[self.part_of(v)] += 1;
        }
    }

    fn take(&mut self, t: usize) {
        for part in 0..3 {
            self.kill_vertex(self.offsets[part] + self.triples[t][part]);
        }
    }

    fn untake(&mut self, t: usize) {
        for part in (0..3).rev() {
            self.revive_vertex(self.offsets[part] + self.triples[t][part]);
        }
    }

    /// Free vertex with the fewest alive triples; ascending global id breaks
    /// ties, which keeps certificates reproducible.
    fn pick_vertex(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for v in 0..self.n_vertices {
            if self.free[v] && self.alive_deg[v] > 0 && best.map_or(true, |(d, _)| self.alive_deg[v] < d)
            {
                best = Some((self.alive_deg[v], v));
            }
        }
        best.map(|(_, v)| v)
    }

    fn target_reached(&self) -> bool {
        matches!(self.goal, Goal::Target(k) if self.best.len() >= k)
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
            return;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.exhausted = true;
                return;
            }
        }

        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let bound = self.chosen.len() + self.candidates.iter().copied().min().unwrap();
        let prune = match self.goal {
            Goal::Maximize => bound <= self.best.len(),
            Goal::Target(k) => bound < k,
        };
        if prune {
            return;
        }
        let v = match self.pick_vertex() {
            Some(v) => v,
            None => return,
        };

        let through: Vec<u32> = self.vertex_triples[v]
            .iter()
            .copied()
            .filter(|&t| self.dead_vertices[t as usize] == 0)
            .collect();
        for t in through {
            self.take(t as usize);
            self.chosen.push(t);
            if let Goal::Target(k) = self.goal {
                if self.chosen.len() == k {
                    self.best = self.chosen.clone();
                }
            }
            if !self.target_reached() {
                self.run();
            }
            self.chosen.pop();
            self.untake(t as usize);
            if self.exhausted || self.target_reached() {
                return;
            }
        }
        self.kill_vertex(v);
        self.run();
        self.revive_vertex(v);
    }
}

fn solve(
    part_sizes: [usize; 3],
    triples: &[[usize; 3]],
    goal: Goal,
    budget: &Budget,
) -> (Vec<u32>, bool) {
    let mut search = Search::new(part_sizes, triples, goal, budget);
    search.run();
    let complete = !search.exhausted;
    (search.best, complete)
}

pub fn max_triangle_packing(g: &TripartiteGraph, budget: &Budget) -> PackingResult {
    let tris = g.triangles();
    let triples: Vec<[usize; 3]> = tris.iter().map(|t| [t.a, t.b, t.c]).collect();
    let (best, complete) = solve(g.part_sizes(), &triples, Goal::Maximize, budget);
    let mut triangles: Vec<Triangle> = best.iter().map(|&i| tris[i as usize]).collect();
    triangles.sort_unstable();
    PackingResult { size: triangles.len(), triangles, proven_optimal: complete }
}

/// Early-exit search for k disjoint triangles: stops at the first
/// certificate of size k, prunes branches that cannot reach k, and reports
/// NotFound only when the pruned search ran to completion.
pub fn find_k_disjoint(g: &TripartiteGraph, k: usize, budget: &Budget) -> KPackingOutcome {
    assert!(k >= 1, "k must be positive");
    let tris = g.triangles();
    let triples: Vec<[usize; 3]> = tris.iter().map(|t| [t.a, t.b, t.c]).collect();
    let (best, complete) = solve(g.part_sizes(), &triples, Goal::Target(k), budget);
    if best.len() >= k {
        let mut triangles: Vec<Triangle> = best.iter().map(|&i| tris[i as usize]).collect();
        triangles.sort_unstable();
        KPackingOutcome::Found(PackingResult {
            size: triangles.len(),
            triangles,
            proven_optimal: true,
        })
    } else if complete {
        KPackingOutcome::NotFound
    } else {
        KPackingOutcome::Unknown
    }
}

pub fn hypergraph_max_matching(h: &TripartiteHypergraph, budget: &Budget) -> HypergraphMatching {
    let n = h.n();
    let (best, complete) = solve([n, n, n], h.edges(), Goal::Maximize, budget);
    let mut triples: Vec<[usize; 3]> = best.iter().map(|&i| h.edges()[i as usize]).collect();
    triples.sort_unstable();
    HypergraphMatching { size: triples.len(), triples, proven_optimal: complete }
}
