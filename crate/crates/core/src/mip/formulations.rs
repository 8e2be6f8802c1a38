use super::digraph::{build_digraph, RootedDigraph};
use super::model::{MipModel, Sense, VarId};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph for which the subset-row formulation is built.
pub const PSTP_CAP: usize = 15;

pub fn x_name(v: usize) -> String {
    format!("x_{v}")
}

pub fn z_name(u: usize, v: usize) -> String {
    format!("z_{u}_{v}")
}

pub fn d_name(v: usize) -> String {
    format!("d_{v}")
}

pub fn y_name(u: usize, v: usize) -> String {
    format!("y_{u}_{v}")
}

/// Default roots: `r` of maximum degree, `r1` its neighbor of maximum degree,
/// ties by smaller index. `None` for edgeless graphs.
pub fn default_roots(g: &Graph) -> Option<(usize, usize)> {
    let r = g.vertices().filter(|&v| g.degree(v) > 0).max_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)))?;
    let r1 = g.neighbors(r).iter().copied().max_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)))?;
    Some((r, r1))
}

fn ones(ids: impl IntoIterator<Item = VarId>) -> Vec<(VarId, f64)> {
    ids.into_iter().map(|v| (v, 1.0)).collect()
}

/// The two-root arborescence formulation: binary `x` over vertices, binary `z`
/// over the arcs of [`build_digraph`], continuous `d` in `[0, n-1]`.
///
/// Rows, in order: one cover row per edge, indegree rows `z(δ⁻(v)) = x_v` for
/// `v ∉ {r, r1}`, big-M ordering rows `d_v >= n(z_uv - 1) + d_u + x_v` per arc,
/// `d_r = 0`, `z(A) = x(V) - 1`, and `z_uv <= x_u`, `z_uv <= x_v` per arc.
pub fn build_parb(g: &Graph, r: usize, r1: usize) -> Result<MipModel> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices { n: g.n(), min: 2 });
    }
    let dg = build_digraph(g, r, r1)?;
    build_parb_on(g, &dg)
}

pub fn build_parb_on(g: &Graph, dg: &RootedDigraph) -> Result<MipModel> {
    let n = g.n();
    let r = dg.root;
    let r1 = dg.secondary_root.ok_or_else(|| Error::InvalidArgument("digraph has no secondary root".into()))?;
    let big_m = n as f64;

    let mut m = MipModel::new("parb");
    m.push_metadata("formulation", "parb");
    m.push_metadata("roots", format!("r={r} r1={r1}"));
    let x: Vec<VarId> = (0..n).map(|v| m.add_binary(x_name(v))).collect::<Result<_>>()?;
    let z: Vec<VarId> = dg.arcs().iter().map(|&(u, v)| m.add_binary(z_name(u, v))).collect::<Result<_>>()?;
    let d: Vec<VarId> = (0..n).map(|v| m.add_continuous(d_name(v), 0.0, (n - 1) as f64)).collect::<Result<_>>()?;

    // antiparallel arcs would repeat the same cover row; one per edge
    for (u, v) in g.edges() {
        m.add_constraint(format!("cover_{u}_{v}"), ones([x[u], x[v]]), Sense::Ge, 1.0)?;
    }
    for v in (0..n).filter(|&v| v != r && v != r1) {
        let mut terms = ones(dg.in_arcs(v).iter().map(|&a| z[a]));
        terms.push((x[v], -1.0));
        m.add_constraint(format!("indeg_{v}"), terms, Sense::Eq, 0.0)?;
    }
    for (a, &(u, v)) in dg.arcs().iter().enumerate() {
        let terms = vec![(d[v], 1.0), (d[u], -1.0), (z[a], -big_m), (x[v], -1.0)];
        m.add_constraint(format!("mtz_{u}_{v}"), terms, Sense::Ge, -big_m)?;
    }
    m.add_constraint("root", vec![(d[r], 1.0)], Sense::Eq, 0.0)?;
    let mut card = ones(z.iter().copied());
    card.extend(x.iter().map(|&xv| (xv, -1.0)));
    m.add_constraint("card", card, Sense::Eq, -1.0)?;
    for (a, &(u, v)) in dg.arcs().iter().enumerate() {
        m.add_constraint(format!("link_{u}_{v}_t"), vec![(z[a], 1.0), (x[u], -1.0)], Sense::Le, 0.0)?;
        m.add_constraint(format!("link_{u}_{v}_h"), vec![(z[a], 1.0), (x[v], -1.0)], Sense::Le, 0.0)?;
    }
    m.set_objective(ones(x.iter().copied()));
    Ok(m)
}

/// Arborescence formulation for a digraph whose root has no entering arcs:
/// binary `z` per arc and `d` in `[0, n-1]` with `z(δ⁻(v)) = 1` for `v ≠ r`,
/// `d_v >= n(z_uv - 1) + d_u + 1`, `d_r = 0` and `z(A) = n - 1`. No objective.
pub fn build_qr(dg: &RootedDigraph) -> Result<MipModel> {
    let n = dg.n();
    let r = dg.root;
    if !dg.in_arcs(r).is_empty() {
        return Err(Error::RootHasInArcs(r));
    }
    let big_m = n as f64;
    let mut m = MipModel::new("qr");
    m.push_metadata("formulation", "qr");
    m.push_metadata("roots", format!("r={r}"));
    let z: Vec<VarId> = dg.arcs().iter().map(|&(u, v)| m.add_binary(z_name(u, v))).collect::<Result<_>>()?;
    let d: Vec<VarId> =
        (0..n).map(|v| m.add_continuous(d_name(v), 0.0, n.saturating_sub(1) as f64)).collect::<Result<_>>()?;
    for v in (0..n).filter(|&v| v != r) {
        m.add_constraint(format!("indeg_{v}"), ones(dg.in_arcs(v).iter().map(|&a| z[a])), Sense::Eq, 1.0)?;
    }
    for (a, &(u, v)) in dg.arcs().iter().enumerate() {
        let terms = vec![(d[v], 1.0), (d[u], -1.0), (z[a], -big_m)];
        m.add_constraint(format!("mtz_{u}_{v}"), terms, Sense::Ge, 1.0 - big_m)?;
    }
    m.add_constraint("root", vec![(d[r], 1.0)], Sense::Eq, 0.0)?;
    m.add_constraint("card", ones(z.iter().copied()), Sense::Eq, n.saturating_sub(1) as f64)?;
    Ok(m)
}

/// Subset-row formulation: binary `x`, continuous `y` in `[0, 1]` per edge,
/// cover rows, `y(E(U)) <= |U| - 1` for every vertex set inducing at least
/// `|U|` edges (the other subset rows follow from the bounds), `y(E) = x(V) - 1`
/// and `y_uv <= x_u`, `y_uv <= x_v`. Refuses graphs above [`PSTP_CAP`].
pub fn build_pstp(g: &Graph) -> Result<MipModel> {
    let n = g.n();
    if n > PSTP_CAP {
        return Err(Error::TooLarge { what: "the subset-row formulation", n, cap: PSTP_CAP });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut m = MipModel::new("pstp");
    m.push_metadata("formulation", "pstp");
    let x: Vec<VarId> = (0..n).map(|v| m.add_binary(x_name(v))).collect::<Result<_>>()?;
    let y: Vec<VarId> = edges.iter().map(|&(u, v)| m.add_continuous(y_name(u, v), 0.0, 1.0)).collect::<Result<_>>()?;

    for &(u, v) in &edges {
        m.add_constraint(format!("cover_{u}_{v}"), ones([x[u], x[v]]), Sense::Ge, 1.0)?;
    }
    for mask in 1u32..1 << n {
        let inside: Vec<usize> =
            (0..edges.len()).filter(|&e| mask >> edges[e].0 & 1 == 1 && mask >> edges[e].1 & 1 == 1).collect();
        let size = mask.count_ones() as usize;
        if inside.len() < size {
            continue;
        }
        let label: Vec<String> = (0..n).filter(|v| mask >> v & 1 == 1).map(|v| v.to_string()).collect();
        m.add_constraint(
            format!("sub_{}", label.join("_")),
            ones(inside.iter().map(|&e| y[e])),
            Sense::Le,
            (size - 1) as f64,
        )?;
    }
    let mut card = ones(y.iter().copied());
    card.extend(x.iter().map(|&xv| (xv, -1.0)));
    m.add_constraint("card", card, Sense::Eq, -1.0)?;
    for (e, &(u, v)) in edges.iter().enumerate() {
        m.add_constraint(format!("link_{u}_{v}_t"), vec![(y[e], 1.0), (x[u], -1.0)], Sense::Le, 0.0)?;
        m.add_constraint(format!("link_{u}_{v}_h"), vec![(y[e], 1.0), (x[v], -1.0)], Sense::Le, 0.0)?;
    }
    m.set_objective(ones(x.iter().copied()));
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::corpus::{connected_corpus, CorpusSpec};
    use crate::mip::model::{check_integer_point, Assignment, VarKind};

    #[test]
    fn default_root_rule() {
        assert_eq!(default_roots(&Graph::star(4)), Some((0, 1)));
        // path 0-1-2-3: max degree 1 (ties with 2), its best neighbor 2
        assert_eq!(default_roots(&Graph::path(4)), Some((1, 2)));
        assert_eq!(default_roots(&Graph::empty(3)), None);
    }

    #[test]
    fn parb_shape_on_k2() {
        let m = build_parb(&Graph::complete(2), 0, 1).unwrap();
        let kinds: Vec<(&str, VarKind)> = m.variables().iter().map(|v| (v.name.as_str(), v.kind)).collect();
        assert_eq!(
            kinds,
            vec![
                ("x_0", VarKind::Binary),
                ("x_1", VarKind::Binary),
                ("z_0_1", VarKind::Binary),
                ("d_0", VarKind::Continuous),
                ("d_1", VarKind::Continuous),
            ]
        );
        // two covers of size 1 and the full set; the optimum is 1
        let point = |x0: f64, x1: f64, z: f64, d1: f64| {
            Assignment::from([
                ("x_0".into(), x0),
                ("x_1".into(), x1),
                ("z_0_1".into(), z),
                ("d_0".into(), 0.0),
                ("d_1".into(), d1),
            ])
        };
        assert_eq!(check_integer_point(&m, &point(1.0, 0.0, 0.0, 0.0)), Ok(true));
        assert_eq!(check_integer_point(&m, &point(0.0, 1.0, 0.0, 0.0)), Ok(true));
        assert_eq!(check_integer_point(&m, &point(1.0, 1.0, 1.0, 1.0)), Ok(true));
        assert_eq!(check_integer_point(&m, &point(0.0, 0.0, 0.0, 0.0)), Ok(false));
        // tight ordering row d_1 >= d_0 + x_1 broken by lowering d_1
        assert_eq!(check_integer_point(&m, &point(1.0, 1.0, 1.0, 0.0)), Ok(false));
    }

    #[test]
    fn parb_row_counts() {
        for inst in connected_corpus(&CorpusSpec::mixed(40, 2, 12, 2)) {
            let g = &inst.graph;
            let (r, r1) = default_roots(g).unwrap();
            let m = build_parb(g, r, r1).unwrap();
            let arcs = 2 * g.m() - g.degree(r) - g.degree(r1) + 1;
            let n = g.n();
            assert_eq!(m.variables().len(), 2 * n + arcs);
            assert_eq!(m.constraints().len(), g.m() + (n - 2) + arcs + 1 + 1 + 2 * arcs);
            let covers = m.constraints().iter().filter(|c| c.name.starts_with("cover_")).count();
            assert_eq!(covers, g.m());
        }
    }

    #[test]
    fn parb_errors() {
        assert_eq!(build_parb(&Graph::empty(1), 0, 0).unwrap_err(), Error::TooFewVertices { n: 1, min: 2 });
        assert_eq!(build_parb(&Graph::path(3), 0, 2).unwrap_err(), Error::RootsNotAdjacent { r: 0, r1: 2 });
    }

    #[test]
    fn qr_rejects_entering_arcs() {
        let d = RootedDigraph::new(2, vec![(0, 1), (1, 0)], 0, None).unwrap();
        assert_eq!(build_qr(&d).unwrap_err(), Error::RootHasInArcs(0));
        let single = RootedDigraph::new(1, vec![], 0, None).unwrap();
        let m = build_qr(&single).unwrap();
        assert_eq!(m.variables().len(), 1);
        assert!(m.is_satisfied(&[0.0]));
    }

    #[test]
    fn pstp_triangle_and_cap() {
        let m = build_pstp(&Graph::complete(3)).unwrap();
        let subs: Vec<&str> =
            m.constraints().iter().filter(|c| c.name.starts_with("sub_")).map(|c| c.name.as_str()).collect();
        assert_eq!(subs, vec!["sub_0_1_2"]);
        assert_eq!(m.constraint("sub_0_1_2").unwrap().rhs, 2.0);
        assert!(matches!(build_pstp(&Graph::path(16)), Err(Error::TooLarge { cap: 15, .. })));
    }
}
