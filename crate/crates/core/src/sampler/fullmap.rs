//! Uniform random rooted maps for small `n`: sample the block tree, then a
//! uniform 2-connected block of the right size at every node.

use rand::Rng;

use super::conditioned::{ConditionedSampler, Strategy};
use super::lukasiewicz::{cycle_shift, tree_from_degrees};
use crate::error::SampleError;
use crate::map::{assemble, BlockTree, RootedMap};
use crate::oracle::{two_connected_maps, GROWTH_CAP};

/// Largest `n` covered by the cached 2-connected enumerations.
pub const FULL_MAP_CAP: usize = GROWTH_CAP;

#[derive(Debug, Clone)]
pub struct MapSampler {
    inner: ConditionedSampler,
}

impl MapSampler {
    pub fn new(n: usize) -> Result<Self, SampleError> {
        if n > FULL_MAP_CAP {
            return Err(SampleError::CapExceeded { n, cap: FULL_MAP_CAP });
        }
        Ok(MapSampler { inner: ConditionedSampler::new(n, Strategy::Rejection)? })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> RootedMap {
        let (seq, _) = self.inner.sample(rng);
        let degrees = seq.rotated(cycle_shift(&seq));
        let tree = tree_from_degrees(&degrees).expect("cycle lemma yields a tree");
        let blocks = tree
            .outdegrees()
            .iter()
            .map(|&d| {
                let pool = two_connected_maps(d / 2).expect("within cap");
                pool[rng.random_range(0..pool.len())].clone()
            })
            .collect();
        let bt = BlockTree::from_parts(tree.outdegrees(), blocks).expect("tree shape is valid");
        assemble(&bt).expect("blocks match outdegrees").canonical()
    }
}

/// A uniform rooted map with `n ≤ FULL_MAP_CAP` edges, canonically labelled.
pub fn sample_map<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<RootedMap, SampleError> {
    if n == 0 {
        return Ok(RootedMap::trivial());
    }
    Ok(MapSampler::new(n)?.sample(rng))
}
