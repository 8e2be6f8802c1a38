use crate::graph::{Graph, VertexSet};

/// Greedy proper coloring of the complement graph `Ḡ[U]`.
///
/// Each color class is a clique of `G`, so it meets any stable set at most
/// once and `color_count >= α(G[U])`.
#[derive(Debug, Clone)]
pub struct ColoringBound {
    pub color_count: usize,
    /// `classes[k]` holds the vertices with color `k`.
    pub classes: Vec<VertexSet>,
}

impl ColoringBound {
    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    /// Number of classes meeting `u`. For `u` inside the colored set this is
    /// the size of the restricted coloring, itself a valid bound on `α(G[u])`.
    pub fn colors_present(&self, u: &VertexSet) -> usize {
        self.classes.iter().filter(|c| !c.is_disjoint(u)).count()
    }
}

/// Largest-first greedy coloring of `Ḡ[U]`: vertices are taken by decreasing
/// complement degree within `U` (ties by smaller index) and receive the
/// smallest color not used by a complement neighbor.
pub fn greedy_color_bound(g: &Graph, u: &VertexSet) -> ColoringBound {
    let size = u.len();
    let mut order: Vec<(usize, usize)> =
        u.iter().map(|v| (size - 1 - g.neighbor_set(v).intersection_len(u), v)).collect();
    order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut classes: Vec<VertexSet> = Vec::new();
    for (_, v) in order {
        // v may join class k iff it has no complement neighbor there,
        // i.e. the class lies inside N_G(v)
        let nbrs = g.neighbor_set(v);
        match classes.iter_mut().find(|c| c.is_subset(nbrs)) {
            Some(c) => {
                c.insert(v);
            }
            None => classes.push(VertexSet::from_vertices(g.n(), [v])),
        }
    }
    ColoringBound { color_count: classes.len(), classes }
}
