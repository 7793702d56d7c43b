//! Floating point helpers shared by the zeta sums and the sup-norm search.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Neumaier's compensated summation. Terms are reduced strictly in the order
/// they are added, so results are reproducible bit for bit.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if libm::fabs(self.sum) >= libm::fabs(term) {
            self.compensation += (self.sum - t) + term;
        } else {
            self.compensation += (term - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for t in iter {
            self.add(t);
        }
    }
}

/// Integers above this many bits are scaled by a power of two before they are
/// converted to `f64`.
const DIRECT_BITS: u64 = 1000;

/// Splits `m` into `(top, shift)` with `m ≈ top · 2^shift` and `top < 2^64`.
pub fn split_exponent(m: &BigUint) -> (f64, i64) {
    let shift = m.bits().saturating_sub(64);
    let top = (m >> shift).to_u64().unwrap_or(u64::MAX);
    (top as f64, shift as i64)
}

/// `m · k^(-δ)` for `k >= 1`, evaluated in log space once `m` leaves the
/// comfortable `f64` range.
pub fn scaled_power_term(m: &BigUint, k: u64, delta: f64) -> f64 {
    debug_assert!(k >= 1);
    if m.bits() <= DIRECT_BITS {
        let mf = m.to_f64().unwrap_or(f64::INFINITY);
        return mf * libm::pow(k as f64, -delta);
    }
    let (top, shift) = split_exponent(m);
    top * libm::exp2(shift as f64 - delta * libm::log2(k as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_recovers_small_terms() {
        let mut s = CompensatedSum::new();
        s.add(1.0);
        for _ in 0..10_000 {
            s.add(1e-16);
        }
        assert!((s.value() - (1.0 + 1e-12)).abs() < 1e-18);
    }

    #[test]
    fn huge_integers_use_log_space() {
        // 3^2000 * 2^(-3000): log2 = 2000 log2 3 - 3000
        let m = BigUint::from(3u32).pow(2000);
        assert!(m.bits() > DIRECT_BITS);
        let got = scaled_power_term(&m, 8, 1000.0);
        let expected = libm::exp2(2000.0 * libm::log2(3.0) - 3000.0);
        assert!(((got - expected) / expected).abs() < 1e-12);
    }

    #[test]
    fn direct_path_matches() {
        let m = BigUint::from(76u32);
        assert_eq!(scaled_power_term(&m, 2, 8.0), 76.0 / 256.0);
    }
}
