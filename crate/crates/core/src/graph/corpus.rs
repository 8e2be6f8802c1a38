//! Seeded corpora of connected instances shared by the tests, the `verify`
//! command and the benchmarks.

use super::{bipartite_random, gnp_random, is_connected, Graph, GraphRng};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Gnp { p: f64 },
    Bipartite { n1: usize, n2: usize, p: f64 },
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub family: Family,
    /// Seed that actually produced `graph` (after any reseeding).
    pub seed: u64,
}

impl Instance {
    pub fn is_bipartite_family(&self) -> bool {
        matches!(self.family, Family::Bipartite { .. })
    }
}

/// Draws `G(n, p)` at `seed`, `seed + 1`, ... until the result is connected.
/// Returns the graph and the seed used, or `None` after `max_reseeds` failures.
pub fn connected_gnp(n: usize, p: f64, seed: u64, max_reseeds: u64) -> Option<(Graph, u64)> {
    (0..=max_reseeds).map(|k| seed.wrapping_add(k)).find_map(|s| {
        let g = gnp_random(n, p, s);
        is_connected(&g).then_some((g, s))
    })
}

/// Bipartite counterpart of [`connected_gnp`].
pub fn connected_bipartite(n1: usize, n2: usize, p: f64, seed: u64, max_reseeds: u64) -> Option<(Graph, u64)> {
    (0..=max_reseeds).map(|k| seed.wrapping_add(k)).find_map(|s| {
        let g = bipartite_random(n1, n2, p, s).graph;
        is_connected(&g).then_some((g, s))
    })
}

#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub gnp_densities: Vec<f64>,
    pub bipartite_densities: Vec<f64>,
    pub seed: u64,
}

impl CorpusSpec {
    /// Alternating `G(n, p)` with `p` in 0.2..=0.6 and bipartite with `p` in 0.1..=0.5.
    pub fn mixed(count: usize, min_n: usize, max_n: usize, seed: u64) -> Self {
        CorpusSpec {
            count,
            min_n,
            max_n,
            gnp_densities: vec![0.2, 0.3, 0.4, 0.5, 0.6],
            bipartite_densities: vec![0.1, 0.2, 0.3, 0.4, 0.5],
            seed,
        }
    }
}

const CORPUS_RESEEDS: u64 = 1_000_000;

/// Builds `spec.count` connected instances. Even indices are `G(n, p)`, odd
/// indices bipartite with sides `n / 2` and `n - n / 2`; bipartite slots with
/// `n < 2` fall back to `G(n, p)`.
pub fn connected_corpus(spec: &CorpusSpec) -> Vec<Instance> {
    assert!(spec.min_n >= 1 && spec.min_n <= spec.max_n);
    let mut rng = GraphRng::new(spec.seed);
    (0..spec.count)
        .map(|i| {
            let n = rng.range_inclusive(spec.min_n, spec.max_n);
            let base = rng.next_u64() >> 16;
            let bipartite = i % 2 == 1 && n >= 2 && !spec.bipartite_densities.is_empty();
            if bipartite {
                let p = spec.bipartite_densities[rng.range_inclusive(0, spec.bipartite_densities.len() - 1)];
                let (n1, n2) = (n / 2, n - n / 2);
                let (graph, seed) =
                    connected_bipartite(n1, n2, p, base, CORPUS_RESEEDS).expect("reseed budget exhausted");
                Instance {
                    name: format!("bip_{n1}x{n2}_p{p}_s{seed}"),
                    graph,
                    family: Family::Bipartite { n1, n2, p },
                    seed,
                }
            } else {
                let p = spec.gnp_densities[rng.range_inclusive(0, spec.gnp_densities.len() - 1)];
                let (graph, seed) = connected_gnp(n, p, base, CORPUS_RESEEDS).expect("reseed budget exhausted");
                Instance { name: format!("gnp_{n}_p{p}_s{seed}"), graph, family: Family::Gnp { p }, seed }
            }
        })
        .collect()
}
