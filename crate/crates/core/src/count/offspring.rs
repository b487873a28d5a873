//! The critical offspring law `μ({2k}) = C_k (4/27)^k / C(4/27)` with
//! `C(4/27) = 4/3`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use super::critical::{critical_values, ratio_to_f64, tail_bounds, Bracket, DEFAULT_TRUNCATION};
use super::{count_two_connected, two_connected_counts};
use crate::error::CountError;

/// `c = (8/(27π))^{1/2}`: `μ({x}) ~ c x^{-5/2}` in the outdegree `x = 2j`.
pub static TAIL_CONSTANT: std::sync::LazyLock<f64> =
    std::sync::LazyLock::new(|| (8.0 / (27.0 * std::f64::consts::PI)).sqrt());

/// `c / 2^{5/2} = (108π)^{-1/2}`: `μ({2j}) ~ c_h j^{-5/2}` in the half-degree `j`.
pub static HALF_TAIL_CONSTANT: std::sync::LazyLock<f64> =
    std::sync::LazyLock::new(|| (108.0 * std::f64::consts::PI).sqrt().recip());

/// Exact `μ({2k}) = (3/4) C_k (4/27)^k`.
pub fn mu_pmf(k: usize) -> BigRational {
    let num = BigUint::from(3u32) * count_two_connected(k) * BigUint::from(4u32).pow(k as u32);
    let den = BigUint::from(4u32) * BigUint::from(27u32).pow(k as u32);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `μ({0}), ..., μ({2·cap})` in double precision, by the term recurrence.
pub fn mu_pmf_table(cap: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(cap + 1);
    out.push(0.75);
    if cap == 0 {
        return out;
    }
    out.push(0.75 * 8.0 / 27.0);
    for k in 1..cap {
        let kf = k as f64;
        let r = (18.0 * kf * kf - 18.0 * kf + 4.0) / (18.0 * kf * kf + 27.0 * kf + 9.0);
        let prev = out[k];
        out.push(prev * r);
    }
    out
}

/// Certified upper bound on `μ` beyond `2·cap`, when the tail certificate
/// holds at `cap`.
pub fn mu_tail_majorant(cap: usize) -> Result<BigRational, CountError> {
    let t = mu_pmf(cap) * BigRational::new(BigInt::from(4), BigInt::from(3));
    let b = tail_bounds(cap, &t)?;
    Ok(b.upper * BigRational::new(BigInt::from(3), BigInt::from(4)))
}

/// The offspring mean bracket `Σ 2k μ({2k})` lies within `1e-9` of `2/3`.
pub fn mu_mean_check() -> bool {
    let Ok(cv) = critical_values(DEFAULT_TRUNCATION) else {
        return false;
    };
    mean_bracket_ok(&cv.mean)
}

pub(crate) fn mean_bracket_ok(mean: &Bracket) -> bool {
    let target = BigRational::new(BigInt::from(2), BigInt::from(3));
    let eps = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64));
    mean.within(&target, &eps)
}

/// `μ({2j}) j^{5/2}` from the exact pmf. Tends to [`HALF_TAIL_CONSTANT`]
/// `≈ 0.05429`, not to [`TAIL_CONSTANT`], which belongs to the outdegree
/// scale (see [`mu_tail_check_outdegree`]).
pub fn mu_tail_check(j: usize) -> f64 {
    ratio_to_f64(&mu_pmf(j)) * (j as f64).powf(2.5)
}

/// `μ({2j}) (2j)^{5/2}`, which tends to [`TAIL_CONSTANT`].
pub fn mu_tail_check_outdegree(j: usize) -> f64 {
    ratio_to_f64(&mu_pmf(j)) * (2.0 * j as f64).powf(2.5)
}

/// The offspring law with exact pmf access and a cached float table.
#[derive(Debug, Clone)]
pub struct OffspringLaw {
    cap: usize,
    pmf: Vec<f64>,
}

impl OffspringLaw {
    pub fn new(cap: usize) -> Self {
        OffspringLaw { cap, pmf: mu_pmf_table(cap) }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Exact probability of `2k` children.
    pub fn pmf_exact(&self, k: usize) -> BigRational {
        mu_pmf(k)
    }

    /// Float probabilities of `0, 2, ..., 2·cap` children.
    pub fn pmf_table(&self) -> &[f64] {
        &self.pmf
    }

    /// Exact mass beyond `2·cap`, i.e. `1 - Σ_{k ≤ cap} μ({2k})`.
    pub fn residual_exact(&self) -> BigRational {
        let counts = two_connected_counts(self.cap);
        let mut sum = BigUint::default();
        let mut pow4 = BigUint::from(1u32);
        for c in &counts {
            sum = sum * 27u32 + c * &pow4;
            pow4 *= 4u32;
        }
        let partial = BigRational::new(
            BigInt::from(sum * 3u32),
            BigInt::from(BigUint::from(27u32).pow(self.cap as u32) * 4u32),
        );
        BigRational::from_integer(BigInt::from(1)) - partial
    }
}
