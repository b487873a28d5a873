//! Certified brackets for `C(4/27)` and `Ĉ(4/27) = Σ k C_k (4/27)^k`.
//!
//! Write `t_k = C_k (4/27)^k`. For `k ≥ 1` the terms satisfy
//! `t_{k+1} / t_k = (18k² - 18k + 4) / (18k² + 27k + 9)`, which tends to 1,
//! so a geometric tail bound is useless. Instead the tail `Σ_{j>K} t_j` is
//! squeezed between two power-law comparisons:
//!
//! - if `t_j j^{5/2}` is nonincreasing for `j ≥ K`, the tail is at most
//!   `(2/3) K t_K`;
//! - if `t_j (j - 1/2)^{5/2}` is nondecreasing for `j ≥ K`, the tail is at
//!   least `(2/3) t_K (K - 1/2)^{5/2} (K + 1/2)^{-3/2}`, bounded below by a
//!   rational using `x^{3/2} ≥ x²` on `(0, 1)`.
//!
//! Both monotonicity claims reduce to polynomial inequalities in `j`, which
//! are certified by shifting to `j = K + x` and checking that every
//! coefficient is nonnegative.
//!
//! For `Ĉ`, the recurrence telescopes to the exact tail identity
//! `Σ_{j>K} (9j - 4) t_j = (18K² - 18K + 4) t_K`, so its tail follows from the
//! tail of `C`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::two_connected_counts;
use crate::error::CountError;

/// Truncation that brings both brackets below width `1e-10`.
pub const DEFAULT_TRUNCATION: usize = 8192;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl Bracket {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    /// True when the bracket lies inside `[x - eps, x + eps]`.
    pub fn within(&self, x: &BigRational, eps: &BigRational) -> bool {
        self.lower >= x - eps && self.upper <= x + eps
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (ratio_to_f64(&self.lower), ratio_to_f64(&self.upper))
    }
}

#[derive(Debug, Clone)]
pub struct CriticalValues {
    pub truncation: usize,
    /// Bracket for `C(4/27)`.
    pub c_value: Bracket,
    /// Bracket for `Ĉ(4/27)`.
    pub c_hat: Bracket,
    /// Bracket for the offspring mean `2 Ĉ / C`.
    pub mean: Bracket,
}

pub(crate) fn ratio_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(int(n), int(d))
}

type Poly = Vec<BigInt>;

fn poly(coeffs: &[i64]) -> Poly {
    coeffs.iter().map(|&c| int(c)).collect()
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(a: &Poly, e: u32) -> Poly {
    (0..e).fold(vec![BigInt::one()], |acc, _| poly_mul(&acc, a))
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect()
}

/// Coefficients of `p(x + s)`.
fn taylor_shift(p: &Poly, s: &BigInt) -> Poly {
    let mut c = p.clone();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * s;
            c[j] += t;
        }
    }
    c
}

fn nonnegative_from(p: &Poly, k: usize) -> bool {
    taylor_shift(p, &BigInt::from(k)).iter().all(|c| !c.is_negative())
}

// numerator and denominator of t_{j+1}/t_j as polynomials in j
fn ratio_num() -> Poly {
    poly(&[4, -18, 18])
}

fn ratio_den() -> Poly {
    poly(&[9, 27, 18])
}

/// `j^5 den² - (j+1)^5 num² ≥ 0` means `t_j j^{5/2}` does not increase.
fn upper_certificate() -> Poly {
    let j5 = poly_pow(&poly(&[0, 1]), 5);
    let j15 = poly_pow(&poly(&[1, 1]), 5);
    poly_sub(
        &poly_mul(&j5, &poly_pow(&ratio_den(), 2)),
        &poly_mul(&j15, &poly_pow(&ratio_num(), 2)),
    )
}

/// `(2j+1)^5 num² - (2j-1)^5 den² ≥ 0` means `t_j (j - 1/2)^{5/2}` does not
/// decrease.
fn lower_certificate() -> Poly {
    poly_sub(
        &poly_mul(&poly_pow(&poly(&[1, 2]), 5), &poly_pow(&ratio_num(), 2)),
        &poly_mul(&poly_pow(&poly(&[-1, 2]), 5), &poly_pow(&ratio_den(), 2)),
    )
}

/// Certified bracket for `Σ_{j>K} t_j` given `t_K`.
pub fn tail_bounds(k: usize, t_k: &BigRational) -> Result<Bracket, CountError> {
    if k < 2 || !nonnegative_from(&upper_certificate(), k) || !nonnegative_from(&lower_certificate(), k) {
        return Err(CountError::IncreaseK(k));
    }
    let kk = k as i64;
    let upper = rat(2, 3) * rat(kk, 1) * t_k;
    // x = (K - 1/2) / (K + 1/2)
    let x = rat(2 * kk - 1, 2 * kk + 1);
    let lower = rat(2, 3) * t_k * rat(2 * kk - 1, 2) * &x * &x;
    Ok(Bracket { lower, upper })
}

/// Brackets from explicit coefficients `C_0..=C_K` (the last index is the
/// truncation point). Used directly to check that corrupted coefficients are
/// caught.
pub fn critical_values_from(counts: &[BigUint]) -> Result<CriticalValues, CountError> {
    let k = counts.len().saturating_sub(1);
    if k < 2 {
        return Err(CountError::IncreaseK(k));
    }
    // numerators over the common denominator 27^K
    let mut sum = BigUint::zero();
    let mut weighted = BigUint::zero();
    let mut pow4 = BigUint::one();
    for (i, c) in counts.iter().enumerate() {
        sum = sum * 27u32 + c * &pow4;
        weighted = weighted * 27u32 + c * &pow4 * i;
        pow4 *= 4u32;
    }
    let den = BigInt::from(BigUint::from(27u32).pow(k as u32));
    let partial = BigRational::new(BigInt::from(sum), den.clone());
    let partial_hat = BigRational::new(BigInt::from(weighted), den.clone());
    let t_k = BigRational::new(BigInt::from(&counts[k] * BigUint::from(4u32).pow(k as u32)), den);

    let tail = tail_bounds(k, &t_k)?;
    let c_value = Bracket { lower: &partial + &tail.lower, upper: &partial + &tail.upper };

    let kk = k as i64;
    let boundary = &t_k * rat(18 * kk * kk - 18 * kk + 4, 1);
    let hat_tail = |t: &BigRational| (&boundary + rat(4, 1) * t) / rat(9, 1);
    let c_hat = Bracket {
        lower: &partial_hat + hat_tail(&tail.lower),
        upper: &partial_hat + hat_tail(&tail.upper),
    };
    let two = rat(2, 1);
    let mean = Bracket {
        lower: &two * &c_hat.lower / &c_value.upper,
        upper: &two * &c_hat.upper / &c_value.lower,
    };
    Ok(CriticalValues { truncation: k, c_value, c_hat, mean })
}

/// Brackets for `C(4/27)`, `Ĉ(4/27)` and the offspring mean from the first
/// `K + 1` terms.
pub fn critical_values(k: usize) -> Result<CriticalValues, CountError> {
    if k < 2 {
        return Err(CountError::IncreaseK(k));
    }
    critical_values_from(&two_connected_counts(k))
}
