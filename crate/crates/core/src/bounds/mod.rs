//! Upper bounds on the stable-set number of an induced subgraph.
//!
//! Both bounds ignore connectivity; they are the classical maximum stable set
//! bounds and are valid for the feasible stable sets of the CVC search because
//! those are in particular stable.

mod coloring;
mod matching;

pub use coloring::{greedy_color_bound, ColoringBound};
pub use matching::{
    bipartite_stable_bound, bipartite_stable_bound_with_sides, is_bipartite, maximum_matching, two_coloring_within,
};
