use super::{Graph, VertexSet};

const NONE: usize = usize::MAX;

/// True iff a traversal from vertex 0 reaches every vertex.
///
/// The graph on zero vertices is treated as connected.
pub fn is_connected(g: &Graph) -> bool {
    is_connected_within(g, &VertexSet::full(g.n()))
}

/// Connectivity of the subgraph induced by `alive`. The empty set counts as connected.
pub fn is_connected_within(g: &Graph, alive: &VertexSet) -> bool {
    let Some(start) = alive.min() else { return true };
    let mut seen = VertexSet::new(g.n());
    seen.insert(start);
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if alive.contains(w) && seen.insert(w) {
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == alive.len()
}

/// Cut-vertices of `g`, by a single low-link depth-first search.
pub fn articulation_points(g: &Graph) -> VertexSet {
    articulation_points_within(g, &VertexSet::full(g.n()))
}

/// Cut-vertices of the subgraph induced by `alive`.
///
/// A vertex is reported when its removal increases the number of connected
/// components of `G[alive]`. Runs in `O(n + m)` with an explicit stack.
pub fn articulation_points_within(g: &Graph, alive: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut cut = VertexSet::new(n);
    let mut timer = 1;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in alive.iter() {
        if disc[root] != 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        stack.push((root, NONE, 0));

        while let Some(top) = stack.last_mut() {
            let (v, parent, i) = *top;
            if let Some(&w) = g.neighbors(v).get(i) {
                top.2 += 1;
                if !alive.contains(w) {
                    continue;
                }
                if disc[w] == 0 {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == NONE {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if parent == root {
                    root_children += 1;
                } else if low[v] >= disc[parent] {
                    cut.insert(parent);
                }
            }
        }
        if root_children >= 2 {
            cut.insert(root);
        }
    }
    cut
}

/// `G[V \ removed]` together with the map back to the original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the label in the host graph of vertex `i`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_original(&self, v: usize) -> usize {
        self.original[v]
    }

    pub fn from_original(&self, v: usize) -> Option<usize> {
        self.original.binary_search(&v).ok()
    }
}

pub fn induced_delete(g: &Graph, removed: &VertexSet) -> InducedSubgraph {
    let original: Vec<usize> = g.vertices().filter(|&v| !removed.contains(v)).collect();
    let mut index = vec![NONE; g.n()];
    for (i, &v) in original.iter().enumerate() {
        index[v] = i;
    }
    let edges = g.edges().filter(|&(u, v)| index[u] != NONE && index[v] != NONE).map(|(u, v)| (index[u], index[v]));
    let graph = Graph::from_edges(original.len(), edges).expect("induced subgraph is simple");
    InducedSubgraph { graph, original }
}

/// Depth-first spanning tree of the component of `root`, as `(parent, child)`
/// edges in discovery order. Neighbors are explored in increasing label order.
pub fn dfs_tree(g: &Graph, root: usize) -> Vec<(usize, usize)> {
    let mut seen = VertexSet::new(g.n());
    let mut tree = Vec::with_capacity(g.n().saturating_sub(1));
    seen.insert(root);
    let mut stack = vec![(root, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (v, i) = *top;
        match g.neighbors(v).get(i) {
            Some(&w) => {
                top.1 += 1;
                if seen.insert(w) {
                    tree.push((v, w));
                    stack.push((w, 0));
                }
            }
            None => {
                stack.pop();
            }
        }
    }
    tree
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_cut_vertices(g: &Graph) -> VertexSet {
        let mut out = VertexSet::new(g.n());
        for v in g.vertices() {
            let h = induced_delete(g, &VertexSet::from_vertices(g.n(), [v]));
            if !is_connected(&h.graph) {
                out.insert(v);
            }
        }
        out
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&Graph::complete(3)));
        assert!(!is_connected(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()));
        assert!(is_connected(&Graph::path(50)));
        assert!(is_connected(&Graph::empty(1)));
        assert!(!is_connected(&Graph::empty(2)));
    }

    #[test]
    fn articulation_examples() {
        assert_eq!(articulation_points(&Graph::path(3)).to_vec(), vec![1]);
        assert!(articulation_points(&Graph::cycle(5)).is_empty());
        // bowtie: two triangles sharing vertex 2
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(articulation_points(&bowtie).to_vec(), vec![2]);
        assert_eq!(articulation_points(&bowtie), brute_cut_vertices(&bowtie));
        assert!(articulation_points(&Graph::complete(2)).is_empty());
        assert!(articulation_points(&Graph::empty(1)).is_empty());
    }

    #[test]
    fn articulation_within_mask() {
        // C_6 minus vertex 0 is the path 1-2-3-4-5
        let g = Graph::cycle(6);
        let mut alive = VertexSet::full(6);
        alive.remove(0);
        assert_eq!(articulation_points_within(&g, &alive).to_vec(), vec![2, 3, 4]);
    }

    #[test]
    fn induced_delete_examples() {
        let k3 = Graph::complete(3);
        let h = induced_delete(&k3, &VertexSet::from_vertices(3, [1]));
        assert_eq!(h.graph, Graph::complete(2));
        assert_eq!(h.original, vec![0, 2]);
        assert_eq!(induced_delete(&k3, &VertexSet::new(3)).graph, k3);
        let p5 = Graph::path(5);
        let h = induced_delete(&p5, &VertexSet::from_vertices(5, [0, 4]));
        assert_eq!(h.graph, Graph::path(3));
        assert_eq!(h.from_original(2), Some(1));
        assert_eq!(h.from_original(4), None);
    }

    #[test]
    fn dfs_tree_examples() {
        assert_eq!(dfs_tree(&Graph::complete(3), 0), vec![(0, 1), (1, 2)]);
        assert_eq!(dfs_tree(&Graph::star(4), 0), vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
        let p10 = Graph::path(10);
        let t = dfs_tree(&p10, 0);
        assert_eq!(t, (1..10).map(|v| (v - 1, v)).collect::<Vec<_>>());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn articulation_matches_deletion(g in arb_graph(12)) {
            prop_assume!(is_connected(&g));
            prop_assert_eq!(articulation_points(&g), brute_cut_vertices(&g));
        }

        #[test]
        fn dfs_tree_spans_component(g in arb_graph(12)) {
            prop_assume!(is_connected(&g));
            let t = dfs_tree(&g, 0);
            prop_assert_eq!(t.len(), g.n() - 1);
            for &(u, v) in &t {
                prop_assert!(g.has_edge(u, v));
            }
        }

        #[test]
        fn induced_delete_is_clean(g in arb_graph(10), mask in any::<u16>()) {
            let removed = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|v| mask >> v & 1 == 1));
            let h = induced_delete(&g, &removed);
            prop_assert_eq!(h.graph.n(), g.n() - removed.len());
            for (a, b) in h.graph.edges() {
                prop_assert!(a != b);
                prop_assert!(g.has_edge(h.to_original(a), h.to_original(b)));
            }
            prop_assert_eq!(h.graph.m(), g.induced_edge_count(&removed.complement()));
        }
    }
}
