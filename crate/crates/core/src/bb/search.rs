use std::rc::Rc;
use std::time::Instant;

use super::{greedy_cvc_2approx, SolveReport, SolveStatus, SolverConfig};
use crate::bounds::{bipartite_stable_bound_with_sides, greedy_color_bound, is_bipartite, ColoringBound};
use crate::error::{Error, Result};
use crate::graph::{
    articulation_points, articulation_points_within, is_connected, is_connected_within, Graph, VertexSet,
};
use crate::oracle::check_cvc;

/// An `(S, U)` pair: the current feasible stable set and the candidates that
/// may still join it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchNode {
    pub s: VertexSet,
    pub u: VertexSet,
}

impl SearchNode {
    /// `(∅, V \ C)` with `C` the cut-vertices of `g`.
    pub fn root(g: &Graph) -> Self {
        let mut u = VertexSet::full(g.n());
        u.difference_with(&articulation_points(g));
        SearchNode { s: VertexSet::new(g.n()), u }
    }
}

/// Candidates after adding `v` to a stable set, given the enlarged set `s`:
/// `(U ∩ N̄(v)) \ cut-vertices(G \ s)`. `u` must no longer contain `v`.
fn include_candidates(g: &Graph, s: &VertexSet, u: &VertexSet, v: usize) -> VertexSet {
    let mut next = u.clone();
    next.difference_with(g.neighbor_set(v));
    let alive = s.complement();
    debug_assert!(is_connected_within(g, &alive), "branched on a cut-vertex {v}");
    next.difference_with(&articulation_points_within(g, &alive));
    next
}

/// Splits `node` on `v ∈ U` into the exclude child `(S, U - v)` and the include
/// child `(S + v, (U ∩ N̄(v)) - cut-vertices(G \ (S + v)))`.
pub fn branch(g: &Graph, node: &SearchNode, v: usize) -> Result<(SearchNode, SearchNode)> {
    if !node.u.contains(v) {
        return Err(Error::InvalidArgument(format!("vertex {v} is not a candidate of the node")));
    }
    let mut u = node.u.clone();
    u.remove(v);
    let mut s = node.s.clone();
    s.insert(v);
    let alive = s.complement();
    assert!(is_connected_within(g, &alive), "invariant violated: removing {v} disconnects G \\ S");
    let include = SearchNode { u: include_candidates(g, &s, &u, v), s };
    let exclude = SearchNode { s: node.s.clone(), u };
    Ok((exclude, include))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Mode {
    Connected,
    RussianDoll,
    Unconstrained,
}

impl Mode {
    fn connected(self) -> bool {
        self != Mode::Unconstrained
    }
}

struct CachedColoring {
    coloring: ColoringBound,
    size: usize,
}

#[derive(Clone)]
struct Node {
    s: VertexSet,
    s_len: usize,
    u: VertexSet,
    /// Coloring inherited from the closest ancestor that computed one.
    cache: Option<Rc<CachedColoring>>,
}

enum Bound {
    Coloring { reuse: bool },
    Bipartite { left: VertexSet },
}

struct Engine {
    /// Relabeled input: internal vertex `i` is `order[i]` of the input, and
    /// higher labels have higher branching priority.
    g: Graph,
    order: Vec<usize>,
    connected: bool,
    bound: Bound,
    deadline: Option<Instant>,
    best: VertexSet,
    best_len: usize,
    nodes: u64,
    timed_out: bool,
}

impl Engine {
    fn bound(&self, node: &mut Node) -> usize {
        match &self.bound {
            Bound::Bipartite { left } => bipartite_stable_bound_with_sides(&self.g, &node.u, left),
            Bound::Coloring { reuse: false } => greedy_color_bound(&self.g, &node.u).color_count,
            Bound::Coloring { reuse: true } => {
                let size = node.u.len();
                if let Some(c) = &node.cache {
                    if 4 * size >= 3 * c.size {
                        return c.coloring.colors_present(&node.u);
                    }
                }
                let coloring = greedy_color_bound(&self.g, &node.u);
                let count = coloring.color_count;
                node.cache = Some(Rc::new(CachedColoring { coloring, size }));
                count
            }
        }
    }

    fn fresh_bound(&self, u: &VertexSet) -> usize {
        match &self.bound {
            Bound::Bipartite { left } => bipartite_stable_bound_with_sides(&self.g, u, left),
            Bound::Coloring { .. } => greedy_color_bound(&self.g, u).color_count,
        }
    }

    fn update_incumbent(&mut self, s: &VertexSet, s_len: usize) {
        if s_len > self.best_len {
            self.best = s.clone();
            self.best_len = s_len;
            #[cfg(debug_assertions)]
            {
                let cert = check_cvc(&self.g, &s.complement());
                assert!(self.g.is_stable(s) && cert.is_cover);
                assert!(!self.connected || cert.is_connected_induced);
            }
        }
    }

    /// Depth-first loop over an explicit stack. Returns the unexplored nodes
    /// when the deadline passes, else an empty stack.
    fn run(&mut self, mut stack: Vec<Node>) -> Vec<Node> {
        while let Some(mut node) = stack.pop() {
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.timed_out = true;
                stack.push(node);
                return stack;
            }
            while !node.u.is_empty() {
                let b = self.bound(&mut node);
                if self.best_len >= node.s_len + b {
                    break;
                }
                let v = node.u.max().expect("non-empty");
                node.u.remove(v);
                stack.push(node.clone());

                node.s.insert(v);
                node.s_len += 1;
                node.u = if self.connected {
                    include_candidates(&self.g, &node.s, &node.u, v)
                } else {
                    let mut u = node.u;
                    u.difference_with(self.g.neighbor_set(v));
                    u
                };
                self.nodes += 1;
                self.update_incumbent(&node.s, node.s_len);
            }
        }
        stack
    }

    fn pending_bound(&self, stack: &[Node]) -> usize {
        stack.iter().map(|nd| nd.s_len + self.fresh_bound(&nd.u)).max().unwrap_or(0)
    }
}

pub(super) fn solve(input: &Graph, cfg: &SolverConfig, mode: Mode) -> Result<SolveReport> {
    cfg.validate()?;
    let started = Instant::now();
    let n = input.n();
    if mode.connected() {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if !is_connected(input) {
            return Err(Error::Disconnected);
        }
    }

    // increasing degree, ties by decreasing index: the last label is popped first
    let mut order: Vec<usize> = input.vertices().collect();
    order.sort_by(|&a, &b| input.degree(a).cmp(&input.degree(b)).then(b.cmp(&a)));
    let g = input.relabel(&order);
    let mut inverse = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        inverse[v] = i;
    }

    let bound = match (cfg.use_bipartite_bound, is_bipartite(&g)) {
        (true, Some((left, _))) => Bound::Bipartite { left },
        _ => Bound::Coloring { reuse: cfg.coloring_reuse },
    };
    let mut engine = Engine {
        order,
        connected: mode.connected(),
        bound,
        deadline: cfg.time_limit.map(|t| started + t),
        best: VertexSet::new(n),
        best_len: 0,
        nodes: 0,
        timed_out: false,
        g,
    };

    if cfg.warm_start && mode.connected() && n >= 2 {
        let cover = greedy_cvc_2approx(input)?;
        let s = VertexSet::from_vertices(n, input.vertices().filter(|&v| !cover.contains(v)).map(|v| inverse[v]));
        let len = s.len();
        engine.update_incumbent(&s, len);
    }

    let mut pending_bound = 0;
    match mode {
        Mode::Connected | Mode::Unconstrained => {
            let mut u = VertexSet::full(n);
            if mode.connected() {
                u.difference_with(&articulation_points(&engine.g));
            }
            engine.nodes += 1;
            let root = Node { s: VertexSet::new(n), s_len: 0, u, cache: None };
            let left = engine.run(vec![root]);
            pending_bound = engine.pending_bound(&left);
        }
        Mode::RussianDoll => {
            let cut = articulation_points(&engine.g);
            for first in (0..n).rev() {
                if cut.contains(first) {
                    continue;
                }
                let s = VertexSet::from_vertices(n, [first]);
                let mut u = VertexSet::from_vertices(n, 0..first);
                u = include_candidates(&engine.g, &s, &u, first);
                let node = Node { s, s_len: 1, u, cache: None };
                if engine.timed_out {
                    pending_bound = pending_bound.max(1 + engine.fresh_bound(&node.u));
                    continue;
                }
                engine.nodes += 1;
                engine.update_incumbent(&node.s, 1);
                let left = engine.run(vec![node]);
                pending_bound = pending_bound.max(engine.pending_bound(&left));
            }
        }
    }

    let status = if engine.timed_out { SolveStatus::TimeLimit } else { SolveStatus::Optimal };
    let cover = VertexSet::from_vertices(n, (0..n).filter(|&i| !engine.best.contains(i)).map(|i| engine.order[i]));
    let cert = check_cvc(input, &cover);
    assert!(cert.is_cover, "search returned a non-cover");
    assert!(!mode.connected() || cert.is_connected_induced, "search returned a disconnected cover");

    let best_bound = match status {
        SolveStatus::Optimal => engine.best_len,
        SolveStatus::TimeLimit => engine.best_len.max(pending_bound),
    };
    Ok(SolveReport {
        cover_size: cover.len(),
        cover,
        node_count: engine.nodes,
        wall_time: started.elapsed(),
        status,
        best_bound,
        vertex_order: engine.order.iter().rev().copied().collect(),
    })
}
