use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};

/// Directed graph on `0..n` with a main root and an optional secondary root.
///
/// Arcs are kept sorted lexicographically; the position of an arc in
/// [`RootedDigraph::arcs`] is its index everywhere else in the module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    in_arcs: Vec<Vec<usize>>,
    out_arcs: Vec<Vec<usize>>,
    pub root: usize,
    pub secondary_root: Option<usize>,
}

impl RootedDigraph {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>, root: usize, secondary_root: Option<usize>) -> Result<Self> {
        for &v in arcs.iter().flat_map(|(a, b)| [a, b]).chain([&root]).chain(secondary_root.as_ref()) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if let Some(&(v, _)) = arcs.iter().find(|(a, b)| a == b) {
            return Err(Error::SelfLoop(v));
        }
        arcs.sort_unstable();
        arcs.dedup();
        let mut in_arcs = vec![Vec::new(); n];
        let mut out_arcs = vec![Vec::new(); n];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            out_arcs[u].push(i);
            in_arcs[v].push(i);
        }
        Ok(RootedDigraph { n, arcs, in_arcs, out_arcs, root, secondary_root })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Indices of the arcs entering `v` (`δ⁻(v)`).
    pub fn in_arcs(&self, v: usize) -> &[usize] {
        &self.in_arcs[v]
    }

    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        self.arcs.binary_search(&(u, v)).ok()
    }
}

/// Orients `g` for the two-root formulation: edges at `r` become arcs out of
/// `r`, the remaining edges at `r1` become arcs out of `r1`, all other edges
/// are bidirected. Afterwards `δ⁻(r) = ∅` and `δ⁻(r1) = {r → r1}`.
pub fn build_digraph(g: &Graph, r: usize, r1: usize) -> Result<RootedDigraph> {
    let n = g.n();
    for v in [r, r1] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if !g.has_edge(r, r1) {
        return Err(Error::RootsNotAdjacent { r, r1 });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut arcs = Vec::with_capacity(2 * g.m());
    for (a, b) in g.edges() {
        if a == r || b == r {
            arcs.push((r, if a == r { b } else { a }));
        } else if a == r1 || b == r1 {
            arcs.push((r1, if a == r1 { b } else { a }));
        } else {
            arcs.push((a, b));
            arcs.push((b, a));
        }
    }
    RootedDigraph::new(n, arcs, r, Some(r1))
}

/// Bidirects every edge of `g` and deletes the arcs entering `r`.
pub fn rooted_bidirected(g: &Graph, r: usize) -> Result<RootedDigraph> {
    if r >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: r, n: g.n() });
    }
    let arcs = g.edges().flat_map(|(a, b)| [(a, b), (b, a)]).filter(|&(_, b)| b != r).collect();
    RootedDigraph::new(g.n(), arcs, r, None)
}
