//! Mixed-integer formulations of connected vertex cover, their exhaustive
//! verification on small graphs, and LP file output.

mod digraph;
mod formulations;
mod lp;
mod model;
mod verify;
mod witness;

pub use digraph::{build_digraph, rooted_bidirected, RootedDigraph};
pub use formulations::{
    build_parb, build_parb_on, build_pstp, build_qr, d_name, default_roots, x_name, y_name, z_name, PSTP_CAP,
};
pub use lp::write_lp;
pub use model::{check_integer_point, Assignment, Constraint, MipModel, Sense, VarId, VarKind, Variable, TOLERANCE};
pub use verify::{
    count_qr_solutions, enumerate_verify_parb, parb_counterexample, parb_counterexample_for, pstp_counterexample,
    pstp_counterexample_for, Counterexample, PARB_VERIFY_CAP,
};
pub use witness::{feasible_d, witness_parb, Witness};
