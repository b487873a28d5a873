//! Exact counts of rooted maps and rooted 2-connected maps, the series
//! identities linking them, and the critical offspring law.

mod critical;
mod offspring;
mod series;

pub use critical::{
    critical_values, critical_values_from, tail_bounds, Bracket, CriticalValues, DEFAULT_TRUNCATION,
};
#[cfg(test)]
pub(crate) use critical::ratio_to_f64;
pub(crate) use offspring::mean_bracket_ok;
pub use offspring::{
    mu_mean_check, mu_pmf, mu_pmf_table, mu_tail_check, mu_tail_check_outdegree, mu_tail_majorant, OffspringLaw,
    HALF_TAIL_CONSTANT, TAIL_CONSTANT,
};
pub use series::{
    compose_check, compose_identity_holds, even_substitution, lagrange_check, lagrange_identity_holds, maps_series,
    two_connected_series, RationalSeries,
};

use num_bigint::BigUint;
use num_traits::One;

fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of rooted planar maps with `n` edges: `2·3^n (2n)! / ((n+2)! n!)`.
pub fn count_maps(n: usize) -> BigUint {
    let num = BigUint::from(2u32) * BigUint::from(3u32).pow(n as u32) * factorial(2 * n);
    let den = factorial(n + 2) * factorial(n);
    num / den
}

/// Number of rooted 2-connected maps with `k` edges: `C_0 = 1` and
/// `C_k = 2 (3k-3)! / (k! (2k-1)!)`.
pub fn count_two_connected(k: usize) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    BigUint::from(2u32) * factorial(3 * k - 3) / (factorial(k) * factorial(2 * k - 1))
}

/// `C_0, ..., C_k_max` by the term recurrence, cheaper than factorials for
/// long runs.
pub fn two_connected_counts(k_max: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(BigUint::one());
    if k_max == 0 {
        return out;
    }
    out.push(BigUint::from(2u32));
    for k in 1..k_max {
        let k64 = k as u64;
        let prev = &out[k];
        let next = prev * ((3 * k64) * (3 * k64 - 1) * (3 * k64 - 2)) / ((k64 + 1) * (2 * k64 + 1) * (2 * k64));
        out.push(next);
    }
    out
}
