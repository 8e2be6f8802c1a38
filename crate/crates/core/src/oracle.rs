//! Exhaustive ground truth for small graphs.
//!
//! Everything here works on `u32` bitmasks with its own traversal code so that
//! it stays independent from the search in [`crate::bb`] and the connectivity
//! routines in [`crate::graph`].

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph the exhaustive solvers accept by default.
pub const DEFAULT_CAP: usize = 20;
const HARD_CAP: usize = 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CvcCertificate {
    pub cover: VertexSet,
    pub is_cover: bool,
    pub is_connected_induced: bool,
}

impl CvcCertificate {
    pub fn is_valid(&self) -> bool {
        self.is_cover && self.is_connected_induced
    }
}

/// Checks both defining properties of a connected vertex cover from scratch.
///
/// The empty set is connected only when the graph has no edges; a single
/// vertex is always connected.
pub fn check_cvc(g: &Graph, c: &VertexSet) -> CvcCertificate {
    let is_cover = g.edges().all(|(u, v)| c.contains(u) || c.contains(v));
    let is_connected_induced = match c.iter().next() {
        None => g.m() == 0,
        Some(start) => {
            let mut seen = vec![false; g.n()];
            seen[start] = true;
            let mut stack = vec![start];
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if c.contains(w) && !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count == c.len()
        }
    };
    CvcCertificate { cover: c.clone(), is_cover, is_connected_induced }
}

struct Masks {
    n: usize,
    adj: Vec<u32>,
    all: u32,
}

impl Masks {
    fn new(g: &Graph, cap: usize, what: &'static str) -> Result<Self> {
        let n = g.n();
        if n > cap.min(HARD_CAP) {
            return Err(Error::TooLarge { what, n, cap: cap.min(HARD_CAP) });
        }
        let mut adj = vec![0u32; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let all = if n == 32 { !0 } else { (1u32 << n) - 1 };
        Ok(Masks { n, adj, all })
    }

    /// Connectivity of the subgraph induced by `alive`; empty counts as connected.
    fn connected(&self, alive: u32) -> bool {
        if alive == 0 {
            return true;
        }
        let mut reached = alive & alive.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & alive & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached == alive
    }
}

struct CvcSearch<'a> {
    m: &'a Masks,
    best: u32,
    best_len: u32,
}

impl CvcSearch<'_> {
    // Decide vertices in index order; `stable` holds the chosen stable set and
    // `forbidden` its neighbors.
    fn run(&mut self, i: usize, stable: u32, forbidden: u32) {
        let len = stable.count_ones();
        if len + (self.m.n - i) as u32 <= self.best_len {
            return;
        }
        if i == self.m.n {
            if self.m.connected(self.m.all & !stable) {
                self.best = stable;
                self.best_len = len;
            }
            return;
        }
        let bit = 1u32 << i;
        if forbidden & bit == 0 {
            let next = stable | bit;
            // vertices added later cannot reconnect a graph split by `next`
            if self.m.connected(self.m.all & !next) {
                self.run(i + 1, next, forbidden | self.m.adj[i]);
            }
        }
        self.run(i + 1, stable, forbidden);
    }
}

/// Minimum connected vertex cover by enumerating stable sets `S` with `G \ S`
/// connected. Returns the cover and its size. Refuses graphs above
/// [`DEFAULT_CAP`] vertices.
pub fn brute_force_cvc(g: &Graph) -> Result<(VertexSet, usize)> {
    brute_force_cvc_capped(g, DEFAULT_CAP)
}

pub fn brute_force_cvc_capped(g: &Graph, cap: usize) -> Result<(VertexSet, usize)> {
    let m = Masks::new(g, cap, "exhaustive CVC search")?;
    if m.n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !m.connected(m.all) {
        return Err(Error::Disconnected);
    }
    // the empty stable set is always feasible
    let mut search = CvcSearch { m: &m, best: 0, best_len: 0 };
    search.run(0, 0, 0);
    let cover = VertexSet::from_vertices(m.n, (0..m.n).filter(|v| search.best >> v & 1 == 0));
    let size = cover.len();
    Ok((cover, size))
}

/// Minimum (not necessarily connected) vertex cover size.
pub fn brute_force_vc(g: &Graph) -> Result<usize> {
    brute_force_vc_capped(g, DEFAULT_CAP)
}

pub fn brute_force_vc_capped(g: &Graph, cap: usize) -> Result<usize> {
    let m = Masks::new(g, cap, "exhaustive VC search")?;
    fn alpha(m: &Masks, candidates: u32) -> u32 {
        if candidates == 0 {
            return 0;
        }
        let v = candidates.trailing_zeros() as usize;
        let rest = candidates & !(1 << v);
        let with = 1 + alpha(m, rest & !m.adj[v]);
        if m.adj[v] & rest == 0 {
            return with;
        }
        with.max(alpha(m, rest))
    }
    Ok(m.n - alpha(&m, m.all) as usize)
}

/// True when the minimum connected vertex cover is strictly larger than the
/// minimum vertex cover.
pub fn is_interesting(g: &Graph) -> Result<bool> {
    Ok(brute_force_cvc(g)?.1 > brute_force_vc(g)?)
}

/// All feasible stable sets of `g` (stable, with `G \ S` connected), as masks.
/// Exhaustive over all `2^n` subsets; for tests on `n <= 16`.
pub fn feasible_stable_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let m = Masks::new(g, 16, "feasible stable set enumeration")?;
    Ok((0..=m.all)
        .filter(|&s| (0..m.n).all(|v| s >> v & 1 == 0 || m.adj[v] & s == 0))
        .filter(|&s| m.connected(m.all & !s))
        .map(|s| VertexSet::from_vertices(m.n, (0..m.n).filter(|v| s >> v & 1 == 1)))
        .collect())
}
