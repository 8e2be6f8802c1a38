use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

const NONE: usize = usize::MAX;

/// Two-coloring of `g` found by breadth-first search, or `None` if `g` has an
/// odd cycle. Each component's smallest vertex goes to the first side.
pub fn is_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    two_coloring_within(g, &VertexSet::full(g.n()))
}

/// Two-coloring of `G[u]`.
pub fn two_coloring_within(g: &Graph, u: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut side = vec![NONE; n];
    let mut queue = VecDeque::new();
    for s in u.iter() {
        if side[s] != NONE {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !u.contains(w) {
                    continue;
                }
                if side[w] == NONE {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let left = VertexSet::from_vertices(n, u.iter().filter(|&v| side[v] == 0));
    let right = VertexSet::from_vertices(n, u.iter().filter(|&v| side[v] == 1));
    Some((left, right))
}

/// Maximum matching of the bipartite graph `G[left ∪ right]` restricted to
/// edges between the two sides, by Hopcroft–Karp phases: a breadth-first pass
/// layers the graph from the free left vertices, then depth-first passes
/// augment along vertex-disjoint shortest paths.
pub fn maximum_matching(g: &Graph, left: &VertexSet, right: &VertexSet) -> usize {
    let n = g.n();
    let mut mate = vec![NONE; n];
    let mut dist = vec![NONE; n];
    let mut size = 0;
    let lefts: Vec<usize> = left.to_vec();

    // greedy initial matching
    for &u in &lefts {
        if let Some(&w) = g.neighbors(u).iter().find(|&&w| right.contains(w) && mate[w] == NONE) {
            mate[u] = w;
            mate[w] = u;
            size += 1;
        }
    }

    let mut queue = VecDeque::new();
    loop {
        // layering
        queue.clear();
        for &u in &lefts {
            if mate[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = NONE;
            }
        }
        let mut limit = NONE;
        while let Some(u) = queue.pop_front() {
            if dist[u] >= limit {
                continue;
            }
            for &w in g.neighbors(u) {
                if !right.contains(w) {
                    continue;
                }
                let m = mate[w];
                if m == NONE {
                    limit = limit.min(dist[u]);
                } else if dist[m] == NONE {
                    dist[m] = dist[u] + 1;
                    queue.push_back(m);
                }
            }
        }
        if limit == NONE {
            return size;
        }

        for &u in &lefts {
            if mate[u] == NONE && augment(g, right, u, limit, &mut mate, &mut dist) {
                size += 1;
            }
        }
    }
}

fn augment(g: &Graph, right: &VertexSet, u: usize, limit: usize, mate: &mut [usize], dist: &mut [usize]) -> bool {
    for &w in g.neighbors(u) {
        if !right.contains(w) {
            continue;
        }
        let m = mate[w];
        let ok = if m == NONE {
            dist[u] == limit
        } else {
            dist[m] == dist[u].wrapping_add(1) && augment(g, right, m, limit, mate, dist)
        };
        if ok {
            mate[w] = u;
            mate[u] = w;
            return true;
        }
    }
    dist[u] = NONE;
    false
}

/// `α(G[u])` for bipartite `G[u]`, as `|u| - ν(G[u])` by König's theorem.
pub fn bipartite_stable_bound(g: &Graph, u: &VertexSet) -> Result<usize> {
    let (left, right) = two_coloring_within(g, u).ok_or(Error::NotBipartite)?;
    Ok(u.len() - maximum_matching(g, &left, &right))
}

/// As [`bipartite_stable_bound`], with `G[u]` known to be bipartite with one
/// side contained in `left`.
pub fn bipartite_stable_bound_with_sides(g: &Graph, u: &VertexSet, left: &VertexSet) -> usize {
    let mut l = u.clone();
    l.intersect_with(left);
    let mut r = u.clone();
    r.difference_with(left);
    u.len() - maximum_matching(g, &l, &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartite_random, gnp_random};

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| g.edges().all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0))
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn bipartition_examples() {
        let (a, b) = is_bipartite(&Graph::cycle(4)).unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2], vec![1, 3]));
        assert!(is_bipartite(&Graph::cycle(5)).is_none());
        let (a, b) = is_bipartite(&Graph::complete_bipartite(3, 3)).unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        // C_5 minus a vertex is a path
        let mut u = VertexSet::full(5);
        u.remove(0);
        assert!(two_coloring_within(&Graph::cycle(5), &u).is_some());
    }

    #[test]
    fn konig_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(bipartite_stable_bound(&k33, &VertexSet::full(6)), Ok(3));
        assert_eq!(bipartite_stable_bound(&Graph::path(4), &VertexSet::full(4)), Ok(2));
        assert_eq!(bipartite_stable_bound(&Graph::cycle(5), &VertexSet::full(5)), Err(Error::NotBipartite));
        assert_eq!(bipartite_stable_bound(&k33, &VertexSet::new(6)), Ok(0));
    }

    #[test]
    fn konig_matches_brute_force() {
        for seed in 0..200 {
            let b = bipartite_random(8, 8, 0.3, seed);
            let full = VertexSet::full(16);
            assert_eq!(bipartite_stable_bound(&b.graph, &full).unwrap(), brute_alpha(&b.graph), "seed {seed}");
            let (left, _) = b.sides();
            assert_eq!(bipartite_stable_bound_with_sides(&b.graph, &full, &left), brute_alpha(&b.graph));
        }
    }

    #[test]
    fn matching_on_larger_graphs_is_consistent() {
        // any two-coloring gives the same matching size
        for seed in 0..20 {
            let b = bipartite_random(60, 70, 0.05, seed);
            let (l, r) = b.sides();
            let direct = maximum_matching(&b.graph, &l, &r);
            let swapped = maximum_matching(&b.graph, &r, &l);
            assert_eq!(direct, swapped);
            let full = VertexSet::full(b.graph.n());
            assert_eq!(bipartite_stable_bound(&b.graph, &full).unwrap(), b.graph.n() - direct);
        }
        assert!(is_bipartite(&gnp_random(30, 0.5, 1)).is_none());
    }
}
