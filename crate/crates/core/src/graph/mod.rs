//! Simple undirected graphs on vertices `0..n`, their text format, connectivity
//! primitives and seeded instance generators.

mod connectivity;
pub mod corpus;
mod dimacs;
mod generate;
mod vertex_set;

pub use connectivity::{
    articulation_points, articulation_points_within, dfs_tree, induced_delete, is_connected, is_connected_within,
    InducedSubgraph,
};
pub use dimacs::{parse_dimacs, parse_dimacs_with_warnings, write_dimacs, DimacsWarning};
pub use generate::{bipartite_random, gnp_random, BipartiteGraph, GraphRng};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency lists and bitset rows.
///
/// Immutable once built. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], rows: vec![VertexSet::new(n); n], m: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either orientation)
    /// collapse to one; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = rows.iter().map(VertexSet::to_vec).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, rows, m })
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    /// Star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighborhood of `v` as a set.
    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Vertices other than `v` that are not adjacent to `v`.
    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].complement();
        s.remove(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.rows[v].intersection_len(set)).sum::<usize>() / 2
    }

    /// Returns true if no two members of `set` are adjacent.
    pub fn is_stable(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set))
    }

    /// Graph with vertex `perm[i]` of `self` renamed to `i`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut inv = vec![usize::MAX; self.n()];
        for (i, &v) in perm.iter().enumerate() {
            inv[v] = i;
        }
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (inv[u], inv[v])))
            .expect("relabel of a valid graph is valid")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}
