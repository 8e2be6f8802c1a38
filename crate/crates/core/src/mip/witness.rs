use std::collections::VecDeque;

use super::digraph::{build_digraph, RootedDigraph};
use super::formulations::{d_name, x_name, z_name};
use super::model::Assignment;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::check_cvc;

/// Arc selection and distance labels completing a cover to a point of the
/// two-root arborescence formulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Indexed like `RootedDigraph::arcs`.
    pub z: Vec<bool>,
    pub d: Vec<i64>,
}

impl Witness {
    pub fn assignment(&self, dg: &RootedDigraph, cover: &VertexSet) -> Assignment {
        let mut a = Assignment::new();
        for v in 0..dg.n() {
            a.insert(x_name(v), if cover.contains(v) { 1.0 } else { 0.0 });
            a.insert(d_name(v), self.d[v] as f64);
        }
        for (&(u, v), &on) in dg.arcs().iter().zip(&self.z) {
            a.insert(z_name(u, v), if on { 1.0 } else { 0.0 });
        }
        a
    }
}

/// Builds `(z, d)` for a connected vertex cover `c`.
///
/// The arborescence is grown breadth-first inside `D[C]` from `r` when
/// `r ∈ C`, else from `r1`. When both roots are in `C` the arc `r → r1` is
/// the only arc entering `r1`, so the tree necessarily uses it. `d` is the tree
/// depth on `C` and `0` elsewhere.
pub fn witness_parb(g: &Graph, c: &VertexSet, r: usize, r1: usize) -> Result<Witness> {
    if !check_cvc(g, c).is_valid() {
        return Err(Error::NotConnectedCover);
    }
    let dg = build_digraph(g, r, r1)?;
    witness_on(&dg, c)
}

pub(crate) fn witness_on(dg: &RootedDigraph, c: &VertexSet) -> Result<Witness> {
    let r = dg.root;
    let r1 = dg.secondary_root.expect("two-root digraph");
    let start = if c.contains(r) {
        r
    } else {
        assert!(c.contains(r1), "a cover contains an endpoint of the edge r r1");
        r1
    };
    let n = dg.n();
    let mut z = vec![false; dg.arcs().len()];
    let mut d = vec![0i64; n];
    let mut seen = VertexSet::new(n);
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &a in dg.out_arcs(u) {
            let v = dg.arcs()[a].1;
            if c.contains(v) && seen.insert(v) {
                z[a] = true;
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
        }
    }
    assert_eq!(seen, *c, "D[C] has no arborescence from {start}");
    if c.contains(r) && c.contains(r1) {
        debug_assert!(z[dg.arc_index(r, r1).expect("arc r r1")]);
    }
    Ok(Witness { z, d })
}

/// Distance labels for fixed binary `z` and `x`: the least `d` with `d_root = 0`,
/// `0 <= d_v <= n - 1` and `d_v >= n(z_uv - 1) + d_u + x_v` on every arc, or
/// `None` if none exists.
///
/// The rows are difference constraints `d_v - d_u >= w_uv`; the least solution
/// above zero is found by longest-path relaxation. A positive cycle of
/// selected arcs drives some label past `n - 1`, which is reported as
/// infeasible.
pub fn feasible_d(dg: &RootedDigraph, z: &[bool], x: &[bool]) -> Option<Vec<i64>> {
    let n = dg.n() as i64;
    let weights: Vec<i64> = dg.arcs().iter().zip(z).map(|(&(_, v), &on)| n * (on as i64 - 1) + x[v] as i64).collect();
    let mut d = vec![0i64; dg.n()];
    loop {
        let mut changed = false;
        for (&(u, v), &w) in dg.arcs().iter().zip(&weights) {
            let need = d[u] + w;
            if need > d[v] {
                if need > n - 1 || v == dg.root {
                    return None;
                }
                d[v] = need;
                changed = true;
            }
        }
        if !changed {
            return Some(d);
        }
    }
}
