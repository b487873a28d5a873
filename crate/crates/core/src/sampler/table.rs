use rand::Rng;

use crate::count::{mu_pmf_table, HALF_TAIL_CONSTANT};
use crate::error::SampleError;

/// Walk length past the cap before falling back to the asymptotic quantile.
const TAIL_WALK_LIMIT: usize = 10_000_000;

/// Inversion table for `μ` on `{0, 2, ..., 2·cap}`.
///
/// The CDF is accumulated in double precision from the term recurrence; the
/// relative error of each entry is below `1e-12` for caps up to `10^6`,
/// which bounds the bias of a draw by the same amount.
#[derive(Debug, Clone)]
pub struct OffspringTable {
    cap: usize,
    cdf: Vec<f64>,
    last_pmf: f64,
}

/// Builds the table for half-degrees `0..=cap`.
pub fn mu_cdf_table(cap: usize) -> Result<OffspringTable, SampleError> {
    if cap == 0 {
        return Err(SampleError::EmptyTable);
    }
    let pmf = mu_pmf_table(cap);
    let mut acc = 0.0;
    let cdf = pmf
        .iter()
        .map(|p| {
            acc += p;
            acc
        })
        .collect();
    Ok(OffspringTable { cap, cdf, last_pmf: pmf[cap] })
}

impl OffspringTable {
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn cdf(&self) -> &[f64] {
        &self.cdf
    }

    /// Float mass beyond `2·cap`.
    pub fn residual(&self) -> f64 {
        1.0 - self.cdf[self.cap]
    }

    /// Half-degree drawn by inversion, or `None` when it exceeds the cap.
    #[inline]
    pub fn sample_half_capped<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<usize> {
        let u: f64 = rng.random();
        self.invert(u)
    }

    #[inline]
    pub(crate) fn invert(&self, u: f64) -> Option<usize> {
        if u < self.cdf[0] {
            return Some(0);
        }
        let k = self.cdf.partition_point(|&c| c <= u);
        (k <= self.cap).then_some(k)
    }

    /// Half-degree with the full law. Values past the cap continue the term
    /// recurrence; beyond [`TAIL_WALK_LIMIT`] steps the asymptotic quantile
    /// of the `c_h k^{-5/2}` tail is returned.
    pub fn sample_half<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.random();
        match self.invert(u) {
            Some(k) => k,
            None => self.tail_from(u),
        }
    }

    /// Inversion of `u ≥ F(cap)` past the table.
    pub(crate) fn tail_from(&self, u: f64) -> usize {
        let mut acc = self.cdf[self.cap];
        let mut p = self.last_pmf;
        let mut k = self.cap;
        while k < self.cap + TAIL_WALK_LIMIT {
            let kf = k as f64;
            p *= (18.0 * kf * kf - 18.0 * kf + 4.0) / (18.0 * kf * kf + 27.0 * kf + 9.0);
            k += 1;
            acc += p;
            if acc > u {
                return k;
            }
        }
        let survival = (1.0 - u).max(f64::MIN_POSITIVE);
        let q = (2.0 * *HALF_TAIL_CONSTANT / (3.0 * survival)).powf(2.0 / 3.0);
        (q as usize).max(k)
    }
}

/// Number of children `2k` with probability `μ({2k})`.
pub fn sample_offspring<R: Rng + ?Sized>(table: &OffspringTable, rng: &mut R) -> usize {
    2 * table.sample_half(rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    #[test]
    fn cap_two_table() {
        let t = mu_cdf_table(2).unwrap();
        let expected = [0.75, 0.75 + 2.0 / 9.0, 0.75 + 2.0 / 9.0 + 4.0 / 243.0];
        for (a, b) in t.cdf().iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(t.residual() > 0.0);
    }

    #[test]
    fn zero_cap_rejected() {
        assert_eq!(mu_cdf_table(0).unwrap_err(), SampleError::EmptyTable);
    }

    #[test]
    fn residual_below_certified_majorant() {
        use crate::count::critical_values;
        let _ = critical_values(100).unwrap();
        let t = mu_cdf_table(1000).unwrap();
        // 1 - F(cap) ≤ (3/4)(2/3) cap t_cap = (2/3) cap μ(2 cap)
        let bound = 2.0 / 3.0 * 1000.0 * crate::count::mu_pmf_table(1000)[1000];
        assert!(t.residual() <= bound * (1.0 + 1e-9));
    }

    #[test]
    fn frequencies_and_truncated_mean() {
        let t = mu_cdf_table(1000).unwrap();
        let mut rng = rng_from_seed(11);
        let draws = 1_000_000;
        let (mut zeros, mut twos) = (0usize, 0usize);
        let mut trunc_sum = 0.0;
        for _ in 0..draws {
            let x = sample_offspring(&t, &mut rng);
            match x {
                0 => zeros += 1,
                2 => twos += 1,
                _ => {}
            }
            trunc_sum += x.min(2000) as f64;
        }
        let f0 = zeros as f64 / draws as f64;
        let f2 = twos as f64 / draws as f64;
        assert!((f0 - 0.75).abs() < 0.002, "{f0}");
        assert!((f2 - 2.0 / 9.0).abs() < 0.002, "{f2}");
        // exact mean and variance of min(X, 2000)
        let pmf = crate::count::mu_pmf_table(1000);
        let mean: f64 = pmf.iter().enumerate().map(|(k, p)| 2.0 * k as f64 * p).sum::<f64>()
            + 2000.0 * t.residual();
        let second: f64 = pmf.iter().enumerate().map(|(k, p)| (2.0 * k as f64).powi(2) * p).sum::<f64>()
            + 2000.0f64.powi(2) * t.residual();
        let sd = ((second - mean * mean) / draws as f64).sqrt();
        let emp = trunc_sum / draws as f64;
        assert!((emp - mean).abs() < 4.0 * sd, "{emp} vs {mean} ± {sd}");
        // the truncated mean sits just under the full mean 2/3
        assert!(mean < 2.0 / 3.0 && mean > 2.0 / 3.0 - 0.02);
    }

    #[test]
    fn tail_draws_exceed_cap() {
        let t = mu_cdf_table(3).unwrap();
        let mut rng = rng_from_seed(3);
        let mut above = 0;
        for _ in 0..200_000 {
            let k = t.sample_half(&mut rng);
            if k > 3 {
                above += 1;
            }
        }
        assert!(above > 0);
    }
}
