//! Decision procedures and exact optimizers the characterizations reduce to.

mod dominating;
mod misc;
mod spanning;

pub use dominating::{
    greedy_dominating_set, is_dominating, min_dominating_set, min_dominating_set_bounded, DominatingSetResult,
    DominationMethod, EXACT_DOMINATION_BOUND,
};
pub use misc::{
    bipartition, continuous_two_colorings, continuous_two_colorings_bounded, is_continuous_coloring,
    is_continuous_map, is_convergence_bipartition, is_locally_irregular, is_two_connected, IrregularityCheck,
    TwoColorings, TWO_COLORING_BOUND,
};
pub use spanning::{
    min_internal_spanning_tree, min_internal_spanning_tree_bounded, tree_from_connected_dominating_set,
    SpanningTreeResult, EXACT_SPANNING_TREE_BOUND,
};
