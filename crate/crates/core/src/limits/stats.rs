//! Kolmogorov–Smirnov statistics and small helpers.

use serde::{Deserialize, Serialize};

/// Asymptotic 99% quantile of the Kolmogorov distribution.
pub const KS_99: f64 = 1.628;

fn sorted(xs: &[f64]) -> Vec<f64> {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

/// `sup_x |F_m(x) - F(x)|`.
pub fn ks_one_sample(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    assert!(!samples.is_empty(), "KS needs samples");
    let v = sorted(samples);
    let m = v.len() as f64;
    v.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (((i + 1) as f64 / m) - f).max(f - i as f64 / m)
        })
        .fold(0.0, f64::max)
}

/// `sup_x |F_a(x) - F_b(x)|`, ties handled by advancing both sides.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    assert!(!a.is_empty() && !b.is_empty(), "KS needs samples");
    let (a, b) = (sorted(a), sorted(b));
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// 99% critical value for a one-sample test of size `m`.
pub fn ks_critical_one(m: usize) -> f64 {
    KS_99 / (m as f64).sqrt()
}

/// 99% critical value for a two-sample test of sizes `m`, `k`.
pub fn ks_critical_two(m: usize, k: usize) -> f64 {
    KS_99 * ((m + k) as f64 / (m * k) as f64).sqrt()
}

pub fn median(xs: &[f64]) -> f64 {
    assert!(!xs.is_empty(), "median of nothing");
    let v = sorted(xs);
    let h = v.len() / 2;
    if v.len() % 2 == 1 {
        v[h]
    } else {
        0.5 * (v[h - 1] + v[h])
    }
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// One line of a statistics report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatRecord {
    pub test: String,
    pub n: usize,
    pub m: usize,
    pub statistic: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl StatRecord {
    /// A record passing when `statistic ≤ threshold`.
    pub fn at_most(test: &str, n: usize, m: usize, statistic: f64, threshold: f64) -> Self {
        StatRecord { test: test.to_string(), n, m, statistic, threshold, pass: statistic <= threshold }
    }

    /// A record passing when `statistic ≥ threshold`.
    pub fn at_least(test: &str, n: usize, m: usize, statistic: f64, threshold: f64) -> Self {
        StatRecord { test: test.to_string(), n, m, statistic, threshold, pass: statistic >= threshold }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain record")
    }
}
