//! Brute-force ground truth for small sizes: weighted even trees, exact
//! block-size laws, and exhaustive rooted-map enumeration.

mod maps;
mod trees;

pub use maps::{enum_maps, grow_maps, two_connected_maps, verify_prop1, GROWTH_CAP, MAP_CAP};
pub use trees::{
    count_even_trees, enum_even_trees, exact_block_law, exact_tree_law, tree_weight, weight_sum_check,
    weighted_trees, ExactLaw, WeightedTree, TREE_CAP,
};
