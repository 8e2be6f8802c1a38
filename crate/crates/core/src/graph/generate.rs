//! Seeded random instance generators.
//!
//! The stream is bit-exact and platform independent:
//!
//! * the 256-bit state of a xoshiro256** generator is filled with four
//!   consecutive outputs of SplitMix64 started at `seed`;
//! * each draw takes the next 64-bit output `x` and forms the uniform
//!   `u = (x >> 11) * 2^-53` in `[0, 1)`;
//! * a candidate edge is kept iff `u < p`.
//!
//! Candidate pairs are visited in lexicographic order of `(u, v)`, one draw per
//! pair, so the same `(n, p, seed)` always yields the same graph.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use super::{Graph, VertexSet};

/// Portable seeded uniform source used by every generator in the crate.
#[derive(Clone, Debug)]
pub struct GraphRng(Xoshiro256StarStar);

impl GraphRng {
    pub fn new(seed: u64) -> Self {
        GraphRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Uniform integer in `lo..=hi` (modulo reduction; bias is irrelevant at
    /// the sizes used here but the value is still deterministic).
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi);
        lo + (self.next_u64() % (hi - lo + 1) as u64) as usize
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp_random(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = GraphRng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are valid")
}

/// Random bipartite graph with sides `0..n1` and `n1..n1+n2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub graph: Graph,
    pub n1: usize,
}

impl BipartiteGraph {
    pub fn n2(&self) -> usize {
        self.graph.n() - self.n1
    }

    pub fn is_left(&self, v: usize) -> bool {
        v < self.n1
    }

    pub fn sides(&self) -> (VertexSet, VertexSet) {
        let n = self.graph.n();
        let left = VertexSet::from_vertices(n, 0..self.n1);
        let right = left.complement();
        (left, right)
    }
}

/// Each of the `n1 * n2` cross pairs is an edge independently with probability `p`.
pub fn bipartite_random(n1: usize, n2: usize, p: f64, seed: u64) -> BipartiteGraph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = GraphRng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::from_edges(n1 + n2, edges).expect("generated pairs are valid");
    BipartiteGraph { graph, n1 }
}
