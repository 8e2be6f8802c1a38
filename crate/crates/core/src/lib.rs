//! Exact solvers for minimum connected vertex cover.
//!
//! * [`graph`]: the graph type, DIMACS I/O, connectivity primitives and generators.
//! * [`bounds`]: stable-set upper bounds used for pruning.
//! * [`bb`]: the combinatorial branch and bound and its warm-start heuristic.
//! * [`oracle`]: exhaustive ground truth for small graphs.
//! * [`mip`]: mixed-integer formulations, LP emission and exhaustive formulation checks.

pub mod bb;
pub mod bounds;
pub mod error;
pub mod graph;
pub mod mip;
pub mod oracle;

pub use bb::{
    greedy_cvc_2approx, russian_doll_solve, solve_cvc_bb, solve_vc_bb, SolveReport, SolveStatus, SolverConfig,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use oracle::{brute_force_cvc, brute_force_vc, check_cvc, is_interesting, CvcCertificate};
