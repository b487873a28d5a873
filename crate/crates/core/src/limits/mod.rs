//! Reference limit laws for the largest blocks, rescalings, and
//! goodness-of-fit statistics.

mod stable;
mod stats;

pub use stable::{gamma_minus_three_halves, laplace_estimate, sample_stable, LaplaceEstimate, StableSpec};
pub use stats::{
    ks_critical_one, ks_critical_two, ks_one_sample, ks_two_sample, mean, median, StatRecord, KS_99,
};

use rand::Rng;
use rand_distr::{Distribution, Gamma};
use serde::{Deserialize, Serialize};

use crate::count::{HALF_TAIL_CONSTANT, TAIL_CONSTANT};

/// `P(G^{-p} ≤ x) = P(G ≥ x^{-1/p})` for `G ~ Γ(k-1)`, `k ≥ 2`: the
/// regularized upper incomplete gamma `Q(k-1, x^{-1/p})`.
pub fn gamma_power_cdf(k: usize, p: f64, x: f64) -> f64 {
    assert!(k >= 2, "k ≥ 2");
    if x <= 0.0 {
        return 0.0;
    }
    if x.is_infinite() {
        return 1.0;
    }
    let y = x.powf(-1.0 / p);
    let mut term = 1.0;
    let mut sum = 1.0;
    for i in 1..k - 1 {
        term *= y / i as f64;
        sum += term;
    }
    (-y).exp() * sum
}

/// CDF of `G_k^{-3/2}`: `Q(k-1, x^{-2/3})`; `exp(-x^{-2/3})` for `k = 2`.
pub fn frechet_type_cdf(k: usize, x: f64) -> f64 {
    gamma_power_cdf(k, 1.5, x)
}

/// Median of `G_2^{-3/2}`: `(ln 2)^{-3/2}`.
pub fn frechet_type_median() -> f64 {
    std::f64::consts::LN_2.powf(-1.5)
}

/// The two candidate constants `s` in `L_{n,k} ≈ s n^{2/3} G_k^{-3/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalePreset {
    /// `(2π/3)^{1/3} ≈ 1.2794`, as displayed in the theorem.
    Theorem,
    /// `(3c/2)^{2/3} ≈ 0.5958`, as derived in its proof.
    #[default]
    Proof,
}

impl ScalePreset {
    pub const ALL: [ScalePreset; 2] = [ScalePreset::Theorem, ScalePreset::Proof];

    pub fn value(self) -> f64 {
        match self {
            ScalePreset::Theorem => (2.0 * std::f64::consts::PI / 3.0).powf(1.0 / 3.0),
            ScalePreset::Proof => (1.5 * *TAIL_CONSTANT).powf(2.0 / 3.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScalePreset::Theorem => "theorem",
            ScalePreset::Proof => "proof",
        }
    }
}

/// `(L - n/3) / (c n^{2/3})`.
pub fn rescale_l1(value: f64, n: usize) -> f64 {
    let n = n as f64;
    (value - n / 3.0) / (*TAIL_CONSTANT * n.powf(2.0 / 3.0))
}

/// `L / (s n^{2/3})`.
pub fn rescale_lk(value: f64, n: usize, scale: f64) -> f64 {
    value / (scale * (n as f64).powf(2.0 / 3.0))
}

/// Scale `(2 c_h)^{2/3} = c^{2/3}/2 ≈ 0.2276` of the fluctuations of
/// `L_{n,1}` derived from the half-degree tail `μ({2j}) ~ c_h j^{-5/2}`:
/// the `2n` non-giant half-degrees sum to `n - L_{n,1}`, so
/// `(n/3 - L_{n,1}) / (0.2276 n^{2/3}) → A`.
pub fn derived_l1_scale() -> f64 {
    (2.0 * *HALF_TAIL_CONSTANT).powf(2.0 / 3.0)
}

/// `(n/3 - L) / (derived_l1_scale() n^{2/3})`.
pub fn rescale_l1_derived(value: f64, n: usize) -> f64 {
    let n = n as f64;
    (n / 3.0 - value) / (derived_l1_scale() * n.powf(2.0 / 3.0))
}

/// Scale `(4 c_h / 3)^{2/3} ≈ 0.1737` under which the `k`-th largest of
/// `2n` iid half-degrees, i.e. `L_{n,k}` for `k ≥ 2`, tends to
/// `G_k^{-2/3}`.
pub fn derived_lk_scale() -> f64 {
    (4.0 * *HALF_TAIL_CONSTANT / 3.0).powf(2.0 / 3.0)
}

/// CDF of `G_k^{-2/3}`: `Q(k-1, x^{-3/2})`.
pub fn inverse_gamma_power_cdf(k: usize, x: f64) -> f64 {
    gamma_power_cdf(k, 2.0 / 3.0, x)
}

/// Standard gamma variate with the given shape (`k - 1` for `G_k`).
pub fn gamma_sample<R: Rng + ?Sized>(shape: f64, rng: &mut R) -> f64 {
    Gamma::new(shape, 1.0).expect("positive shape").sample(rng)
}

/// Median-based scale estimate: `median(L_{n,2} / n^{2/3})` over the
/// median of `G_2^{-3/2}`.
pub fn estimate_scale(l2: &[f64], n: usize) -> f64 {
    let scaled: Vec<f64> = l2.iter().map(|&v| rescale_lk(v, n, 1.0)).collect();
    median(&scaled) / frechet_type_median()
}

/// `|ln(ŝ/s)|` for both presets and the ratio of the larger distance to the
/// smaller one, with the closer preset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleVerdict {
    pub estimate: f64,
    pub distance_theorem: f64,
    pub distance_proof: f64,
    pub ratio: f64,
    pub closer: ScalePreset,
}

pub fn discriminate_scale(estimate: f64) -> ScaleVerdict {
    let dt = (estimate / ScalePreset::Theorem.value()).ln().abs();
    let dp = (estimate / ScalePreset::Proof.value()).ln().abs();
    let (closer, ratio) = if dt <= dp {
        (ScalePreset::Theorem, dp / dt)
    } else {
        (ScalePreset::Proof, dt / dp)
    };
    ScaleVerdict { estimate, distance_theorem: dt, distance_proof: dp, ratio, closer }
}
