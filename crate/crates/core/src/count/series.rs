use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{count_maps, count_two_connected};

/// Power series with exact rational coefficients, truncated after `z^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

fn ratio(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

impl RationalSeries {
    /// Pads or truncates `coeffs` to order `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RationalSeries { coeffs }
    }

    pub fn from_integers(values: &[BigUint], order: usize) -> Self {
        RationalSeries::new(values.iter().map(ratio).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        RationalSeries::new(Vec::new(), order)
    }

    /// The series `z` (or zero when the order is 0).
    pub fn variable(order: usize) -> Self {
        let mut s = RationalSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        RationalSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        RationalSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs: out }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = RationalSeries::zero(self.order());
        acc.coeffs[0] = BigRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Self {
        assert_eq!(self.order(), inner.order());
        assert!(inner.coeffs[0].is_zero(), "composition needs a zero constant term");
        // Horner: (...(c_N g + c_{N-1}) g + ...) g + c_0
        let mut acc = RationalSeries::zero(self.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += c;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients as `"p/q"` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect()
    }
}

/// `M(z)` truncated at order `order`.
pub fn maps_series(order: usize) -> RationalSeries {
    let v: Vec<BigUint> = (0..=order).map(count_maps).collect();
    RationalSeries::from_integers(&v, order)
}

/// `C(z)` truncated at order `order`.
pub fn two_connected_series(order: usize) -> RationalSeries {
    let v: Vec<BigUint> = (0..=order).map(count_two_connected).collect();
    RationalSeries::from_integers(&v, order)
}

/// Whether `m(z) = c(z m(z)^2)` modulo `z^{N+1}`.
pub fn compose_identity_holds(m: &RationalSeries, c: &RationalSeries) -> bool {
    let inner = RationalSeries::variable(m.order()).mul(&m.mul(m));
    m.sub(&c.compose(&inner)).is_zero()
}

/// `M(z) = C(z M(z)^2)` checked exactly through order `order`.
pub fn compose_check(order: usize) -> bool {
    compose_identity_holds(&maps_series(order), &two_connected_series(order))
}

/// `φ(y) = c(y²)`, the per-node weight series of the block tree: a node
/// with `2k` children carries `C_k`.
pub fn even_substitution(c: &RationalSeries, order: usize) -> RationalSeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (k, v) in c.coeffs.iter().enumerate() {
        if 2 * k > order {
            break;
        }
        coeffs[2 * k] = v.clone();
    }
    RationalSeries::new(coeffs, order)
}

/// Whether `expected = [y^{2n}] φ(y)^{2n+1} / (2n+1)` with `φ(y) = c(y²)`.
pub fn lagrange_identity_holds(c: &RationalSeries, n: usize, expected: &BigUint) -> bool {
    assert!(c.order() >= n);
    let phi = even_substitution(c, 2 * n);
    let power = phi.pow(2 * n as u32 + 1);
    let value = power.coeff(2 * n) / BigRational::from_integer(BigInt::from(2 * n + 1));
    value == ratio(expected)
}

/// `M_n = [y^{2n}] C(y²)^{2n+1} / (2n+1)` checked exactly.
pub fn lagrange_check(n: usize) -> bool {
    lagrange_identity_holds(&two_connected_series(n), n, &count_maps(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &RationalSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn series_values() {
        assert_eq!(ints(&maps_series(2)), vec![1, 2, 9]);
        assert_eq!(ints(&two_connected_series(3)), vec![1, 2, 1, 2]);
        assert_eq!(ints(&maps_series(0)), vec![1]);
        assert_eq!(maps_series(2).to_strings(), vec!["1/1", "2/1", "9/1"]);
    }

    #[test]
    fn composition_identity() {
        assert!(compose_check(1));
        assert!(compose_check(2));
        assert!(compose_check(10));
    }

    #[test]
    fn corrupted_coefficient_breaks_composition() {
        let mut c: Vec<BigUint> = (0..=6).map(count_two_connected).collect();
        c[3] += 1u32;
        let c = RationalSeries::from_integers(&c, 6);
        assert!(!compose_identity_holds(&maps_series(6), &c));
    }

    #[test]
    fn lagrange_small() {
        assert!(lagrange_check(0));
        assert!(lagrange_check(1));
        assert!(lagrange_check(5));
        assert!(lagrange_check(12));
        assert!(!lagrange_identity_holds(&two_connected_series(4), 2, &BigUint::from(10u32)));
        // n = 2 by hand: (5 C_2 + 10 C_1²) / 5 = 9
        let c = two_connected_series(2);
        assert!(lagrange_identity_holds(&c, 2, &BigUint::from(9u32)));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let c = two_connected_series(6);
        assert_eq!(c.pow(3), c.mul(&c).mul(&c));
        assert_eq!(c.pow(0).coeff(0), &BigRational::one());
    }
}
