//! The spectrally positive `3/2`-stable law `A` with
//! `E e^{-tA} = exp(Γ(-3/2) t^{3/2})`, `Γ(-3/2) = 4√π/3`.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::Rng;
use rand_distr::{Distribution, Exp1};

const ALPHA: f64 = 1.5;

/// Generator parameters. With `X` standard totally skewed (`β = 1`) in the
/// Samorodnitsky–Taqqu convention, `E e^{-tX} = exp(-t^α / cos(πα/2)) =
/// exp(√2 t^{3/2})`, so `A = σX` with `√2 σ^{3/2} = γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableSpec {
    /// Laplace exponent constant `γ`.
    pub gamma: f64,
    /// Scale applied to the standard variate.
    pub sigma: f64,
}

/// `Γ(-3/2) = 4√π/3`.
pub fn gamma_minus_three_halves() -> f64 {
    4.0 * PI.sqrt() / 3.0
}

impl StableSpec {
    pub fn calibrated() -> Self {
        let gamma = gamma_minus_three_halves();
        StableSpec { gamma, sigma: (gamma / 2f64.sqrt()).powf(2.0 / 3.0) }
    }

    /// `exp(γ t^{3/2})`.
    pub fn laplace(&self, t: f64) -> f64 {
        (self.gamma * t.powf(ALPHA)).exp()
    }

    /// Chambers–Mallows–Stuck with `B = -π/6`, `S = 2^{1/3}`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let b = -PI / 6.0;
        let s = 2f64.powf(1.0 / 3.0);
        let v = loop {
            let v = rng.random_range(-FRAC_PI_2..FRAC_PI_2);
            if v > -FRAC_PI_2 {
                break v;
            }
        };
        let w: f64 = loop {
            let w: f64 = Exp1.sample(rng);
            if w > 0.0 {
                break w;
            }
        };
        let x = s * (ALPHA * (v + b)).sin() / v.cos().powf(1.0 / ALPHA)
            * ((v - ALPHA * (v + b)).cos() / w).powf((1.0 - ALPHA) / ALPHA);
        self.sigma * x
    }
}

impl Default for StableSpec {
    fn default() -> Self {
        StableSpec::calibrated()
    }
}

pub fn sample_stable<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StableSpec::calibrated().sample(rng)
}

/// Monte Carlo estimate of `E e^{-tA}` from `draws` variates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceEstimate {
    pub t: f64,
    pub estimate: f64,
    pub std_error: f64,
    pub target: f64,
}

impl LaplaceEstimate {
    pub fn z_score(&self) -> f64 {
        (self.estimate - self.target) / self.std_error
    }

    pub fn within(&self, sigmas: f64) -> bool {
        self.z_score().abs() <= sigmas
    }
}

pub fn laplace_estimate(samples: &[f64], t: f64, spec: &StableSpec) -> LaplaceEstimate {
    let m = samples.len() as f64;
    let (mut s1, mut s2) = (0.0, 0.0);
    for &a in samples {
        let e = (-t * a).exp();
        s1 += e;
        s2 += e * e;
    }
    let mean = s1 / m;
    let var = (s2 / m - mean * mean).max(0.0) * m / (m - 1.0);
    LaplaceEstimate { t, estimate: mean, std_error: (var / m).sqrt(), target: spec.laplace(t) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    #[test]
    fn gamma_value() {
        assert!((gamma_minus_three_halves() - 2.363_271_8).abs() < 1e-6);
    }

    #[test]
    fn laplace_transform_matches() {
        let spec = StableSpec::calibrated();
        let mut rng = rng_from_seed(17);
        let xs: Vec<f64> = (0..200_000).map(|_| spec.sample(&mut rng)).collect();
        for t in [0.25, 0.5, 1.0] {
            let e = laplace_estimate(&xs, t, &spec);
            assert!(e.within(4.0), "{e:?}");
        }
        let pos = xs.iter().filter(|&&x| x > 0.0).count();
        assert!(pos > 0 && pos < xs.len());
    }
}
