//! `2n+1` iid draws from `μ` conditioned on summing to `2n`.
//!
//! Two exact strategies:
//!
//! - rejection with early abort, cheap for small `n` but needing on the
//!   order of `n^{3/2}` trials (the law is subcritical-conditioned: the sum
//!   must exceed its mean by a single macroscopic jump);
//! - recursive splitting: the positions are halved recursively and the
//!   subtotal of each half is drawn from its exact conditional law
//!   `∝ P(S_{k1} = a) P(S_{k2} = t - a)`, using pmfs of partial sums
//!   precomputed by FFT convolution. `O(n log n)` per sample after an
//!   `O(n log² n)` setup.

use std::collections::HashMap;

use rand::Rng;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::lukasiewicz::{cycle_shift, tree_from_degrees, DegreeSequence};
use super::table::{mu_cdf_table, OffspringTable};
use crate::count::mu_pmf_table;
use crate::error::SampleError;
use crate::rng::{rng_from_seed, SampleRng};

/// Largest `n` for which [`Strategy::Auto`] uses rejection.
pub const AUTO_REJECTION_MAX_N: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Rejection,
    Splitting,
    #[default]
    Auto,
}

/// Rejection sampling with early abort. Returns the sequence and the number
/// of trials used. Needs a table with `cap ≥ n` or falls back to the tail
/// walk for draws past the cap.
pub fn sample_conditioned<R: Rng + ?Sized>(
    n: usize,
    table: &OffspringTable,
    rng: &mut R,
) -> Result<(DegreeSequence, u64), SampleError> {
    if n == 0 {
        return Err(SampleError::ZeroSize);
    }
    let len = 2 * n + 1;
    let mut values = Vec::with_capacity(len);
    let mut trials = 0u64;
    'trial: loop {
        trials += 1;
        values.clear();
        let mut sum = 0usize;
        for _ in 0..len {
            let u: f64 = rng.random();
            let half = match table.invert(u) {
                Some(k) => k,
                None if table.cap() >= n => continue 'trial,
                None => table.tail_from(u),
            };
            sum += half;
            if sum > n {
                continue 'trial;
            }
            values.push(2 * half);
        }
        if sum == n {
            return Ok((DegreeSequence::from_parts(values), trials));
        }
    }
}

fn convolve(planner: &mut FftPlanner<f64>, a: &[f64], b: &[f64], keep: usize) -> Vec<f64> {
    let size = (a.len() + b.len() - 1).next_power_of_two();
    let fwd = planner.plan_fft_forward(size);
    let inv = planner.plan_fft_inverse(size);
    let lift = |v: &[f64]| {
        let mut out: Vec<Complex<f64>> = v.iter().map(|&x| Complex::new(x, 0.0)).collect();
        out.resize(size, Complex::new(0.0, 0.0));
        out
    };
    let (mut fa, mut fb) = (lift(a), lift(b));
    fwd.process(&mut fa);
    fwd.process(&mut fb);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y;
    }
    inv.process(&mut fa);
    let scale = 1.0 / size as f64;
    fa.iter().take(keep).map(|c| (c.re * scale).max(0.0)).collect()
}

/// Exact conditioned sampler by recursive splitting.
///
/// Works in half-units `J = X/2`, so the target is `n` over `2n+1`
/// coordinates. Only values `≤ n` can occur, so every pmf is truncated to
/// `[0, n]` without changing the conditional law. Convolution round-off is
/// absolute, of order `1e-15`; negative outputs are clamped to zero.
#[derive(Debug, Clone)]
pub struct SplitSampler {
    n: usize,
    /// pmf of the sum of `k` half-units on `[0, n]`, for every block length
    /// `k` reached by halving `2n+1`.
    pmfs: HashMap<usize, Vec<f64>>,
}

impl SplitSampler {
    pub fn new(n: usize) -> Result<Self, SampleError> {
        if n == 0 {
            return Err(SampleError::ZeroSize);
        }
        let mut sizes = vec![2 * n + 1];
        let mut i = 0;
        while i < sizes.len() {
            let k = sizes[i];
            if k > 1 {
                for c in [k / 2, k - k / 2] {
                    if !sizes.contains(&c) {
                        sizes.push(c);
                    }
                }
            }
            i += 1;
        }
        sizes.sort_unstable();
        let mut planner = FftPlanner::new();
        let mut pmfs: HashMap<usize, Vec<f64>> = HashMap::new();
        pmfs.insert(1, mu_pmf_table(n));
        for &k in &sizes {
            if k == 1 {
                continue;
            }
            let p = convolve(&mut planner, &pmfs[&(k / 2)], &pmfs[&(k - k / 2)], n + 1);
            pmfs.insert(k, p);
        }
        Ok(SplitSampler { n, pmfs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `P(S_{2n+1} = n)` in half-units: the conditioning probability.
    pub fn conditioning_probability(&self) -> f64 {
        self.pmfs[&(2 * self.n + 1)][self.n]
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> DegreeSequence {
        let len = 2 * self.n + 1;
        let mut values = vec![0usize; len];
        let mut weights: Vec<f64> = Vec::new();
        // (offset, length, total)
        let mut stack = vec![(0usize, len, self.n)];
        while let Some((off, k, t)) = stack.pop() {
            if t == 0 {
                continue;
            }
            if k == 1 {
                values[off] = 2 * t;
                continue;
            }
            let (k1, k2) = (k / 2, k - k / 2);
            let (p1, p2) = (&self.pmfs[&k1], &self.pmfs[&k2]);
            weights.clear();
            let mut total = 0.0;
            for a in 0..=t {
                total += p1[a] * p2[t - a];
                weights.push(total);
            }
            let u = rng.random::<f64>() * total;
            let a = weights.partition_point(|&w| w <= u).min(t);
            stack.push((off + k1, k2, t - a));
            stack.push((off, k1, a));
        }
        DegreeSequence::from_parts(values)
    }
}

#[derive(Debug, Clone)]
enum Engine {
    Rejection(OffspringTable),
    Splitting(SplitSampler),
}

/// Conditioned sampler for a fixed `n` with a chosen strategy.
#[derive(Debug, Clone)]
pub struct ConditionedSampler {
    n: usize,
    engine: Engine,
}

impl ConditionedSampler {
    pub fn new(n: usize, strategy: Strategy) -> Result<Self, SampleError> {
        if n == 0 {
            return Err(SampleError::ZeroSize);
        }
        let rejection = match strategy {
            Strategy::Rejection => true,
            Strategy::Splitting => false,
            Strategy::Auto => n <= AUTO_REJECTION_MAX_N,
        };
        let engine = if rejection {
            Engine::Rejection(mu_cdf_table(n)?)
        } else {
            Engine::Splitting(SplitSampler::new(n)?)
        };
        Ok(ConditionedSampler { n, engine })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strategy(&self) -> Strategy {
        match self.engine {
            Engine::Rejection(_) => Strategy::Rejection,
            Engine::Splitting(_) => Strategy::Splitting,
        }
    }

    /// A conditioned sequence and the number of trials (always 1 when
    /// splitting).
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (DegreeSequence, u64) {
        match &self.engine {
            Engine::Rejection(table) => {
                sample_conditioned(self.n, table, rng).expect("n ≥ 1 checked at construction")
            }
            Engine::Splitting(s) => (s.sample(rng), 1),
        }
    }
}

/// Descending block edge-counts of one sampled map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSizeSample {
    pub n: usize,
    pub sizes: Vec<usize>,
    pub seed: Option<u64>,
    pub trials: u64,
}

impl BlockSizeSample {
    /// `L_{n,k}`, zero past the number of blocks.
    pub fn largest(&self, k: usize) -> usize {
        self.sizes.get(k.saturating_sub(1)).copied().unwrap_or(0)
    }
}

fn sizes_from(seq: &DegreeSequence) -> Vec<usize> {
    let rotated = seq.rotated(cycle_shift(seq));
    let tree = tree_from_degrees(&rotated).expect("cycle lemma yields a tree");
    let mut sizes: Vec<usize> = tree.outdegrees().iter().filter(|&&d| d > 0).map(|d| d / 2).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Block-size sampler for a fixed `n`, reusable across samples.
#[derive(Debug, Clone)]
pub struct BlockSizeSampler {
    inner: ConditionedSampler,
}

impl BlockSizeSampler {
    pub fn new(n: usize, strategy: Strategy) -> Result<Self, SampleError> {
        Ok(BlockSizeSampler { inner: ConditionedSampler::new(n, strategy)? })
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    pub fn conditioned(&self) -> &ConditionedSampler {
        &self.inner
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BlockSizeSample {
        let (seq, trials) = self.inner.sample(rng);
        BlockSizeSample { n: self.inner.n(), sizes: sizes_from(&seq), seed: None, trials }
    }

    /// A sample drawn from a fresh stream seeded with `seed`.
    pub fn sample_seeded(&self, seed: u64) -> BlockSizeSample {
        let mut rng: SampleRng = rng_from_seed(seed);
        BlockSizeSample { seed: Some(seed), ..self.sample(&mut rng) }
    }
}

/// One-shot block sizes of a uniform random map with `n` edges.
pub fn block_sizes<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<BlockSizeSample, SampleError> {
    Ok(BlockSizeSampler::new(n, Strategy::Auto)?.sample(rng))
}
