use crate::error::{Error, Result};
use crate::graph::{dfs_tree, is_connected, Graph, VertexSet};
use crate::oracle::check_cvc;

/// Connected vertex cover of size at most twice the optimum: the vertices with
/// children in a depth-first spanning tree rooted at vertex 0.
pub fn greedy_cvc_2approx(g: &Graph) -> Result<VertexSet> {
    greedy_cvc_2approx_from(g, 0)
}

/// As [`greedy_cvc_2approx`] with the tree rooted at `root`.
///
/// When the root has a single child and no neighbor among the tree leaves it
/// is dropped as well; it is then a leaf of the remaining subtree and all of
/// its edges stay covered.
pub fn greedy_cvc_2approx_from(g: &Graph, root: usize) -> Result<VertexSet> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let tree = dfs_tree(g, root);
    let mut internal = VertexSet::new(n);
    let mut root_children = 0;
    for &(parent, _) in &tree {
        internal.insert(parent);
        if parent == root {
            root_children += 1;
        }
    }
    if root_children == 1 && g.neighbors(root).iter().all(|&w| internal.contains(w)) {
        internal.remove(root);
    }
    debug_assert!(check_cvc(g, &internal).is_valid());
    Ok(internal)
}
