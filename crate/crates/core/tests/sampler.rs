use std::collections::HashMap;

use mapblocks::map::{is_two_connected, validate};
use mapblocks::oracle::{enum_maps, exact_tree_law};
use mapblocks::rng::{rng_from_seed, sample_seed};
use mapblocks::sampler::{
    cycle_shift, montecarlo, sample_map, tree_from_degrees, BlockSizeSampler, ConditionedSampler, MonteCarloConfig,
    OrderedTree, Strategy,
};
use mapblocks::{RootedMap, SampleError};
use num_traits::ToPrimitive;

fn tree_tv(n: usize, strategy: Strategy, draws: usize, seed: u64) -> f64 {
    let sampler = ConditionedSampler::new(n, strategy).unwrap();
    let mut rng = rng_from_seed(seed);
    let mut freq: HashMap<OrderedTree, usize> = HashMap::new();
    for _ in 0..draws {
        let (seq, _) = sampler.sample(&mut rng);
        let t = tree_from_degrees(&seq.rotated(cycle_shift(&seq))).unwrap();
        *freq.entry(t).or_default() += 1;
    }
    let law = exact_tree_law(n).unwrap();
    assert!(freq.keys().all(|t| law.iter().any(|(u, _)| u == t)), "sampled a tree outside the support");
    0.5 * law
        .iter()
        .map(|(t, p)| (freq.get(t).copied().unwrap_or(0) as f64 / draws as f64 - p.to_f64().unwrap()).abs())
        .sum::<f64>()
}

#[test]
fn tree_law_matches_oracle() {
    for n in [2, 3] {
        for strategy in [Strategy::Rejection, Strategy::Splitting] {
            let tv = tree_tv(n, strategy, 100_000, 40 + n as u64);
            assert!(tv < 0.02, "n = {n}, {strategy:?}: tv = {tv}");
        }
    }
}

#[test]
fn uniform_maps_at_n_two() {
    let maps = enum_maps(2).unwrap();
    let mut rng = rng_from_seed(5);
    let draws = 45_000;
    let mut freq: HashMap<RootedMap, usize> = HashMap::new();
    for _ in 0..draws {
        *freq.entry(sample_map(2, &mut rng).unwrap()).or_default() += 1;
    }
    assert_eq!(freq.len(), maps.len());
    let expect = draws as f64 / 9.0;
    let sd = (expect * (1.0 - 1.0 / 9.0)).sqrt();
    for m in &maps {
        let c = freq[m] as f64;
        assert!((c - expect).abs() < 4.0 * sd, "{c} vs {expect}");
    }
}

#[test]
fn full_maps_are_valid_and_sized() {
    let mut rng = rng_from_seed(9);
    for n in 0..=6 {
        for _ in 0..20 {
            let m = sample_map(n, &mut rng).unwrap();
            assert!(validate(&m).is_empty());
            assert_eq!(m.num_edges(), n);
            assert!(m.is_canonical());
        }
    }
    // every 1-edge map is 2-connected
    assert!(is_two_connected(&sample_map(1, &mut rng).unwrap()));
    assert!(matches!(sample_map(7, &mut rng), Err(SampleError::CapExceeded { n: 7, cap: 6 })));
}

#[test]
fn block_sizes_sum_and_sort() {
    for (n, strategy) in [(1, Strategy::Auto), (50, Strategy::Rejection), (5000, Strategy::Splitting)] {
        let s = BlockSizeSampler::new(n, strategy).unwrap();
        for seed in 0..20 {
            let x = s.sample_seeded(seed);
            assert_eq!(x.sizes.iter().sum::<usize>(), n);
            assert!(x.sizes.windows(2).all(|w| w[0] >= w[1]));
            assert!(x.sizes.iter().all(|&v| v > 0));
            assert_eq!(x.seed, Some(seed));
            assert_eq!(s.sample_seeded(seed), x);
        }
    }
}

#[test]
fn mean_largest_block_at_ten_thousand() {
    let mut cfg = MonteCarloConfig::new(10_000, 4, 500);
    cfg.master_seed = 2024;
    let rows = montecarlo(&cfg).unwrap();
    assert_eq!(rows.len(), 2000);
    let mean = rows.iter().map(|(_, _, x)| x.largest(1) as f64).sum::<f64>() / rows.len() as f64 / 1e4;
    assert!((mean - 1.0 / 3.0).abs() < 0.02, "{mean}");
}

#[test]
fn replicas_do_not_depend_on_thread_count() {
    let mut cfg = MonteCarloConfig::new(300, 4, 25);
    cfg.master_seed = 77;
    cfg.threads = Some(1);
    let one = montecarlo(&cfg).unwrap();
    cfg.threads = Some(4);
    let four = montecarlo(&cfg).unwrap();
    assert_eq!(one, four);
    for (r, s, x) in &one {
        assert_eq!(x.seed, Some(sample_seed(77, *r as u64, *s as u64)));
    }
    // a single-replica run reproduces replica 0 exactly
    let mut single = cfg.clone();
    single.replicas = 1;
    let zero: Vec<_> = one.iter().filter(|(r, _, _)| *r == 0).cloned().collect();
    assert_eq!(montecarlo(&single).unwrap(), zero);
}

#[test]
fn zero_counts_rejected() {
    assert!(montecarlo(&MonteCarloConfig::new(10, 0, 5)).is_err());
    assert!(montecarlo(&MonteCarloConfig::new(0, 1, 5)).is_err());
}
