//! Exhaustive formulation checks on small graphs.
//!
//! For a fixed integral `x` the binary `z` candidates are generated from the
//! indegree and linking rows (exactly one selected arc into each covered
//! non-root vertex, none into uncovered ones) and completed with the least
//! feasible distance labels. Every candidate point is then checked against all
//! rows of the model, so a model missing or mangling a row is caught by the
//! comparison with [`check_cvc`].

use super::digraph::{build_digraph, RootedDigraph};
use super::formulations::{build_parb_on, build_pstp, d_name, x_name, y_name, z_name};
use super::model::{MipModel, VarId, TOLERANCE};
use super::witness::feasible_d;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::check_cvc;

/// Largest graph accepted by [`enumerate_verify_parb`].
pub const PARB_VERIFY_CAP: usize = 10;

/// A vertex subset on which a formulation and the direct definition disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub subset: VertexSet,
    /// Whether the model admits a point with `x = χ^subset`; `None` when the
    /// check could neither build a point nor certify infeasibility.
    pub in_formulation: Option<bool>,
    pub is_cvc: bool,
}

/// True iff, for every `C ⊆ V`, `χ^C` extends to a point of the two-root
/// arborescence formulation exactly when `C` is a connected vertex cover.
pub fn enumerate_verify_parb(g: &Graph, r: usize, r1: usize) -> Result<bool> {
    Ok(parb_counterexample(g, r, r1)?.is_none())
}

pub fn parb_counterexample(g: &Graph, r: usize, r1: usize) -> Result<Option<Counterexample>> {
    check_cap(g, PARB_VERIFY_CAP)?;
    let dg = build_digraph(g, r, r1)?;
    let m = build_parb_on(g, &dg)?;
    parb_counterexample_for(g, &dg, &m)
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::TooLarge { what: "exhaustive formulation check", n: g.n(), cap });
    }
    Ok(())
}

struct ArbIds {
    x: Vec<VarId>,
    z: Vec<VarId>,
    d: Vec<VarId>,
}

impl ArbIds {
    fn lookup(m: &MipModel, dg: &RootedDigraph, with_x: bool) -> Result<Self> {
        let get = |name: String| m.var(&name).ok_or(Error::MissingVariable(name));
        let x = if with_x { (0..dg.n()).map(|v| get(x_name(v))).collect::<Result<_>>()? } else { Vec::new() };
        Ok(ArbIds {
            x,
            z: dg.arcs().iter().map(|&(u, v)| get(z_name(u, v))).collect::<Result<_>>()?,
            d: (0..dg.n()).map(|v| get(d_name(v))).collect::<Result<_>>()?,
        })
    }

    fn values(&self, m: &MipModel, x: &[bool], z: &[bool], d: &[i64]) -> Vec<f64> {
        let mut values = vec![0.0; m.variables().len()];
        for (id, &on) in self.x.iter().zip(x) {
            values[id.0] = on as u8 as f64;
        }
        for (id, &on) in self.z.iter().zip(z) {
            values[id.0] = on as u8 as f64;
        }
        for (id, &dv) in self.d.iter().zip(d) {
            values[id.0] = dv as f64;
        }
        values
    }
}

/// Rows whose support is inside `ids`; they can be decided before searching.
fn rows_only_over<'a>(m: &'a MipModel, ids: &[VarId]) -> Vec<&'a super::model::Constraint> {
    m.constraints().iter().filter(|c| c.terms.iter().all(|(v, _)| ids.contains(v))).collect()
}

/// Depth-first search over one selected entering arc per slot, pruning on
/// partial infeasibility of the distance labels. Unselected arcs only give
/// rows that hold for any labels in `[0, n-1]`, so a partial selection
/// without labels has no completion either.
struct ArcChoiceSearch<'a> {
    dg: &'a RootedDigraph,
    x: &'a [bool],
    slots: Vec<Vec<Option<usize>>>,
    z: Vec<bool>,
}

impl ArcChoiceSearch<'_> {
    fn for_each_leaf(&mut self, depth: usize, visit: &mut dyn FnMut(&[bool], &[i64]) -> bool) -> bool {
        if depth == self.slots.len() {
            return match feasible_d(self.dg, &self.z, self.x) {
                Some(d) => visit(&self.z, &d),
                None => false,
            };
        }
        for i in 0..self.slots[depth].len() {
            let choice = self.slots[depth][i];
            if let Some(a) = choice {
                self.z[a] = true;
            }
            let alive = choice.is_none() || feasible_d(self.dg, &self.z, self.x).is_some();
            let stop = alive && self.for_each_leaf(depth + 1, visit);
            if let Some(a) = choice {
                self.z[a] = false;
            }
            if stop {
                return true;
            }
        }
        false
    }
}

/// A point of `m` with `x = χ^C`, if the structured search finds one.
fn parb_point(
    dg: &RootedDigraph,
    m: &MipModel,
    ids: &ArbIds,
    x_rows: &[&super::model::Constraint],
    c: &VertexSet,
) -> Option<Vec<f64>> {
    let n = dg.n();
    let x: Vec<bool> = (0..n).map(|v| c.contains(v)).collect();
    let probe = ids.values(m, &x, &vec![false; dg.arcs().len()], &vec![0; n]);
    if x_rows.iter().any(|row| !row.is_satisfied(&probe)) {
        return None;
    }
    let r = dg.root;
    let r1 = dg.secondary_root;
    let mut slots = Vec::new();
    for v in c.iter().filter(|&v| v != r) {
        let inside: Vec<Option<usize>> =
            dg.in_arcs(v).iter().copied().filter(|&a| c.contains(dg.arcs()[a].0)).map(Some).collect();
        if Some(v) == r1 {
            // no indegree row at the secondary root
            let mut opts = vec![None];
            opts.extend(inside);
            slots.push(opts);
        } else if inside.is_empty() {
            return None;
        } else {
            slots.push(inside);
        }
    }
    let mut search = ArcChoiceSearch { dg, x: &x, slots, z: vec![false; dg.arcs().len()] };
    let mut found = None;
    search.for_each_leaf(0, &mut |z, d| {
        let values = ids.values(m, &x, z, d);
        if m.is_satisfied(&values) {
            found = Some(values);
            true
        } else {
            false
        }
    });
    found
}

/// Runs the subset-by-subset comparison for an already built two-root model.
pub fn parb_counterexample_for(g: &Graph, dg: &RootedDigraph, m: &MipModel) -> Result<Option<Counterexample>> {
    check_cap(g, PARB_VERIFY_CAP)?;
    let n = g.n();
    let ids = ArbIds::lookup(m, dg, true)?;
    let x_rows = rows_only_over(m, &ids.x);
    for mask in 0u32..1 << n {
        let c = VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1));
        let claimed = parb_point(dg, m, &ids, &x_rows, &c).is_some();
        let is_cvc = check_cvc(g, &c).is_valid();
        if claimed != is_cvc {
            return Ok(Some(Counterexample { subset: c, in_formulation: Some(claimed), is_cvc }));
        }
    }
    Ok(None)
}

/// Number of binary `z` (with some `d`) satisfying an arborescence model built
/// by `build_qr` on `dg`.
pub fn count_qr_solutions(dg: &RootedDigraph, m: &MipModel) -> Result<u64> {
    let ids = ArbIds::lookup(m, dg, false)?;
    let all = vec![true; dg.n()];
    let mut slots = Vec::new();
    for v in (0..dg.n()).filter(|&v| v != dg.root) {
        if dg.in_arcs(v).is_empty() {
            return Ok(0);
        }
        slots.push(dg.in_arcs(v).iter().copied().map(Some).collect());
    }
    let mut search = ArcChoiceSearch { dg, x: &all, slots, z: vec![false; dg.arcs().len()] };
    let mut count = 0;
    search.for_each_leaf(0, &mut |z, d| {
        if m.is_satisfied(&ids.values(m, &[], z, d)) {
            count += 1;
        }
        false
    });
    Ok(count)
}

/// Checks the subset-row formulation on every `C ⊆ V`.
pub fn pstp_counterexample(g: &Graph) -> Result<Option<Counterexample>> {
    let m = build_pstp(g)?;
    pstp_counterexample_for(g, &m)
}

pub fn pstp_counterexample_for(g: &Graph, m: &MipModel) -> Result<Option<Counterexample>> {
    let n = g.n();
    check_cap(g, super::formulations::PSTP_CAP)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let get = |name: String| m.var(&name).ok_or(Error::MissingVariable(name));
    let x: Vec<VarId> = (0..n).map(|v| get(x_name(v))).collect::<Result<_>>()?;
    let y: Vec<VarId> = edges.iter().map(|&(u, v)| get(y_name(u, v))).collect::<Result<_>>()?;
    let x_rows = rows_only_over(m, &x);
    for mask in 0u32..1 << n {
        let c = VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1));
        let claimed = pstp_point(g, m, &edges, &x, &y, &x_rows, &c);
        let is_cvc = check_cvc(g, &c).is_valid();
        if claimed != Some(is_cvc) {
            return Ok(Some(Counterexample { subset: c, in_formulation: claimed, is_cvc }));
        }
    }
    Ok(None)
}

/// Decides whether `x = χ^C` extends to a point: either an explicit spanning
/// tree `y` of `G[C]` satisfies every row, or the model's own rows bound
/// `y(E)` below what the cardinality row demands.
fn pstp_point(
    g: &Graph,
    m: &MipModel,
    edges: &[(usize, usize)],
    x: &[VarId],
    y: &[VarId],
    x_rows: &[&super::model::Constraint],
    c: &VertexSet,
) -> Option<bool> {
    let mut values = vec![0.0; m.variables().len()];
    for v in c.iter() {
        values[x[v].0] = 1.0;
    }
    if x_rows.iter().any(|row| !row.is_satisfied(&values)) {
        return Some(false);
    }

    let components = components_within(g, c);
    let edge_index = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).ok();
    if components.len() <= 1 {
        for (u, v) in spanning_forest(g, c) {
            values[y[edge_index(u, v)?].0] = 1.0;
        }
        if m.is_satisfied(&values) {
            return Some(true);
        }
        for &id in y {
            values[id.0] = 0.0;
        }
    }

    // infeasibility certificate from the rows actually present
    let card = m.constraint("card")?;
    let mut required = card.rhs;
    for &(id, coef) in &card.terms {
        if x.contains(&id) {
            required -= coef * values[id.0];
        } else if (coef - 1.0).abs() > TOLERANCE {
            return None;
        }
    }
    if required < -TOLERANCE {
        return Some(false);
    }
    let mut upper = 0.0;
    for (e, &(u, v)) in edges.iter().enumerate() {
        if c.contains(u) && c.contains(v) {
            continue;
        }
        let outside = if c.contains(u) { v } else { u };
        let tag = if outside == u { "t" } else { "h" };
        let forced_zero = m.constraint(&format!("link_{u}_{v}_{tag}")).is_some_and(|row| {
            row.terms.contains(&(y[e], 1.0)) && row.terms.contains(&(x[outside], -1.0)) && row.rhs == 0.0
        });
        if !forced_zero {
            upper += m.variable(y[e]).upper;
        }
    }
    for comp in &components {
        let inner = g.induced_edge_count(comp) as f64;
        let label: Vec<String> = comp.iter().map(|v| v.to_string()).collect();
        let row_bound = m
            .constraint(&format!("sub_{}", label.join("_")))
            .filter(|row| row.terms.len() == inner as usize)
            .map_or(f64::INFINITY, |row| row.rhs);
        upper += inner.min(row_bound);
    }
    (upper < required - TOLERANCE).then_some(false)
}

fn components_within(g: &Graph, c: &VertexSet) -> Vec<VertexSet> {
    let mut left = c.clone();
    let mut out = Vec::new();
    while let Some(s) = left.min() {
        let mut comp = VertexSet::from_vertices(g.n(), [s]);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if c.contains(w) && comp.insert(w) {
                    stack.push(w);
                }
            }
        }
        left.difference_with(&comp);
        out.push(comp);
    }
    out
}

fn spanning_forest(g: &Graph, c: &VertexSet) -> Vec<(usize, usize)> {
    let mut seen = VertexSet::new(g.n());
    let mut tree = Vec::new();
    for s in c.iter() {
        if !seen.insert(s) {
            continue;
        }
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if c.contains(w) && seen.insert(w) {
                    tree.push((v, w));
                    stack.push(w);
                }
            }
        }
    }
    tree
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::corpus::{connected_corpus, CorpusSpec};
    use crate::mip::digraph::rooted_bidirected;
    use crate::mip::formulations::{build_qr, default_roots};

    #[test]
    fn parb_small_graphs() {
        assert_eq!(enumerate_verify_parb(&Graph::complete(2), 0, 1), Ok(true));
        for (r, r1) in Graph::cycle(5).edges().flat_map(|(a, b)| [(a, b), (b, a)]) {
            assert_eq!(enumerate_verify_parb(&Graph::cycle(5), r, r1), Ok(true));
        }
        assert!(matches!(
            enumerate_verify_parb(&Graph::path(11), 0, 1),
            Err(Error::TooLarge { cap: PARB_VERIFY_CAP, .. })
        ));
    }

    #[test]
    fn parb_without_cover_rows_is_caught() {
        let g = Graph::path(3);
        let dg = build_digraph(&g, 0, 1).unwrap();
        let mut m = build_parb_on(&g, &dg).unwrap();
        m.remove_constraints_where(|c| c.name.starts_with("cover_"));
        let cx = parb_counterexample_for(&g, &dg, &m).unwrap().expect("mutant must fail");
        assert_eq!(cx.in_formulation, Some(true));
        assert!(!cx.is_cvc);
    }

    #[test]
    fn parb_cycle_with_pendant_root() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        let dg = build_digraph(&g, 0, 1).unwrap();
        let m = build_parb_on(&g, &dg).unwrap();
        assert_eq!(parb_counterexample_for(&g, &dg, &m), Ok(None));
    }

    #[test]
    fn pstp_small_graphs() {
        for g in [Graph::complete(3), Graph::path(4), Graph::cycle(5), Graph::star(4)] {
            assert_eq!(pstp_counterexample(&g), Ok(None), "{g:?}");
        }
        let mut m = build_pstp(&Graph::cycle(4)).unwrap();
        m.remove_constraints_where(|c| c.name.starts_with("sub_"));
        // C_4 has no subset row anyway except U = V; dropping it admits nothing new
        assert_eq!(pstp_counterexample_for(&Graph::cycle(4), &m), Ok(None));
    }

    #[test]
    fn pstp_without_subset_rows_is_caught() {
        // two triangles joined by a path; the cover {0,1,2,4,5,6} is disconnected
        // and y can put a cycle's worth of weight on each triangle
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(pstp_counterexample(&g), Ok(None));
        let mut m = build_pstp(&g).unwrap();
        m.remove_constraints_where(|c| c.name.starts_with("sub_"));
        let cx = pstp_counterexample_for(&g, &m).unwrap().expect("mutant must fail");
        assert!(!cx.is_cvc);
        assert_ne!(cx.in_formulation, Some(false));
    }

    #[test]
    fn qr_counts_arborescences() {
        let m = |d: &RootedDigraph| build_qr(d).unwrap();
        let p3 = rooted_bidirected(&Graph::path(3), 0).unwrap();
        assert_eq!(count_qr_solutions(&p3, &m(&p3)), Ok(1));
        let k3 = rooted_bidirected(&Graph::complete(3), 0).unwrap();
        assert_eq!(count_qr_solutions(&k3, &m(&k3)), Ok(3));
        let single = rooted_bidirected(&Graph::empty(1), 0).unwrap();
        assert_eq!(count_qr_solutions(&single, &m(&single)), Ok(1));
        let k4 = rooted_bidirected(&Graph::complete(4), 2).unwrap();
        assert_eq!(count_qr_solutions(&k4, &m(&k4)), Ok(16));
    }

    #[test]
    fn parb_corpus_default_roots() {
        for inst in connected_corpus(&CorpusSpec::mixed(40, 2, 8, 21)) {
            let (r, r1) = default_roots(&inst.graph).unwrap();
            assert_eq!(parb_counterexample(&inst.graph, r, r1), Ok(None), "{}", inst.name);
        }
    }
}
