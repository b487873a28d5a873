//! Exact sampling of the conditioned Galton-Watson tree with offspring law
//! `μ`, and through it of the block sizes of a uniform random rooted map.

mod conditioned;
mod fullmap;
mod lukasiewicz;
mod montecarlo;
mod table;

pub use conditioned::{
    block_sizes, sample_conditioned, BlockSizeSample, BlockSizeSampler, ConditionedSampler, SplitSampler,
    Strategy, AUTO_REJECTION_MAX_N,
};
pub use fullmap::{sample_map, MapSampler, FULL_MAP_CAP};
pub use lukasiewicz::{cycle_shift, tree_from_degrees, DegreeSequence, OrderedTree};
pub use montecarlo::{montecarlo, MonteCarloConfig};
pub use table::{mu_cdf_table, sample_offspring, OffspringTable};
