//! Branch and bound for minimum connected vertex cover.
//!
//! The search looks for a maximum *feasible* stable set `S` (stable, with
//! `G \ S` connected) and returns `V \ S`. Nodes are `(S, U)` pairs kept on an
//! explicit stack; a node is expanded while `|S*| < |S| + bound(U)` and
//! branching on `v ∈ U` yields `(S, U - v)` and
//! `(S + v, (U ∩ N̄(v)) - cut-vertices(G \ (S + v)))`.

mod approx;
mod search;

use std::time::Duration;

pub use approx::{greedy_cvc_2approx, greedy_cvc_2approx_from};
pub use search::{branch, SearchNode};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub time_limit: Option<Duration>,
    /// Solve `n` restricted subproblems, one per starting vertex.
    pub use_russian_doll: bool,
    /// On bipartite inputs, bound with the exact bipartite stable-set number.
    pub use_bipartite_bound: bool,
    /// Reuse a node's coloring in its descendants until `|U|` drops below 75%
    /// of the size it was computed for.
    pub coloring_reuse: bool,
    /// Seed the incumbent with the DFS-tree 2-approximation.
    pub warm_start: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            time_limit: None,
            use_russian_doll: false,
            use_bipartite_bound: true,
            coloring_reuse: true,
            warm_start: true,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        match self.time_limit {
            Some(t) if t.is_zero() => Err(Error::InvalidArgument("time limit must be positive".into())),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    TimeLimit,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::TimeLimit => "time_limit",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub cover: VertexSet,
    pub cover_size: usize,
    /// Root plus one node per branching step.
    pub node_count: u64,
    pub wall_time: Duration,
    pub status: SolveStatus,
    /// Upper bound on the stable-set side. Equals `n - cover_size` when optimal.
    pub best_bound: usize,
    /// Branching priority, highest first (decreasing degree, ties by index).
    pub vertex_order: Vec<usize>,
}

impl SolveReport {
    /// Lower bound on the cover size implied by `best_bound`.
    pub fn cover_lower_bound(&self) -> usize {
        self.cover.universe() - self.best_bound
    }
}

/// Minimum connected vertex cover of a connected graph.
///
/// With `cfg.use_russian_doll` set this is [`russian_doll_solve`].
pub fn solve_cvc_bb(g: &crate::Graph, cfg: &SolverConfig) -> Result<SolveReport> {
    if cfg.use_russian_doll {
        return russian_doll_solve(g, cfg);
    }
    search::solve(g, cfg, search::Mode::Connected)
}

/// Russian doll variant: vertices are taken by decreasing degree and step `i`
/// solves the subproblem whose stable sets contain `v_i` and otherwise only
/// later vertices. The incumbent carries over between steps.
pub fn russian_doll_solve(g: &crate::Graph, cfg: &SolverConfig) -> Result<SolveReport> {
    search::solve(g, cfg, search::Mode::RussianDoll)
}

/// Minimum vertex cover with the same engine and all connectivity handling
/// switched off (plain maximum stable set search). Accepts any graph.
pub fn solve_vc_bb(g: &crate::Graph, cfg: &SolverConfig) -> Result<SolveReport> {
    search::solve(g, cfg, search::Mode::Unconstrained)
}
