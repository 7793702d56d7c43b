use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{sup_norm, GammaSurrogate, SearchConfig, ThetaPoint};
use crate::path::MoveType;
use crate::rep::{gamma_up_to, GammaIndex};
use crate::{Error, Result};

/// Caps on `‖g^γ‖ / ‖g^(γ+step)‖` for parts 1..=4.
pub const RATIO_CAPS: [f64; 4] = [2.0, 4.0, 2.0, 2.0];

/// Slack allowed above a cap for grid error.
pub const RATIO_SLACK: f64 = 1e-6;

/// Closed-form maximizer of `f_(m,n) = (zw)^n (xz+yw)^m` on `Θ`:
/// `x = y = √m / (2√(n+m))`, `z = w = √(2n+m) / (2√(n+m))`.
pub fn theta_maximizer(m: u32, n: u32) -> Result<ThetaPoint> {
    if m == 0 && n == 0 {
        return Err(Error::ZeroSurrogate);
    }
    let denom = 2.0 * libm::sqrt(f64::from(n + m));
    let xy = libm::sqrt(f64::from(m)) / denom;
    let zw = libm::sqrt(f64::from(2 * n + m)) / denom;
    ThetaPoint::new(xy, xy, zw, zw)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioBound {
    pub part: u8,
    pub gamma: GammaIndex,
    pub next: GammaIndex,
    pub numerator: f64,
    pub denominator: f64,
    pub ratio: f64,
    pub cap: f64,
    pub within_cap: bool,
}

fn ratio_from(mv: MoveType, gamma: GammaIndex, norm: &mut impl FnMut(GammaIndex) -> Result<f64>) -> Result<RatioBound> {
    let next = mv.apply(gamma)?;
    let numerator = norm(gamma)?;
    let denominator = norm(next)?;
    let ratio = numerator / denominator;
    let cap = RATIO_CAPS[mv.part() as usize - 1];
    Ok(RatioBound {
        part: mv.part(),
        gamma,
        next,
        numerator,
        denominator,
        ratio,
        cap,
        within_cap: ratio <= cap + RATIO_SLACK,
    })
}

/// `‖g^γ‖ / ‖g^(γ+step)‖` for one part of the ratio lemma. `γ` must satisfy
/// the part's region predicate.
pub fn ratio_bound(part: u8, gamma: GammaIndex, config: &SearchConfig) -> Result<RatioBound> {
    let mv = MoveType::from_part(part)?;
    ratio_from(mv, gamma, &mut |g| {
        Ok(sup_norm(GammaSurrogate::from_gamma(g), config)?.value)
    })
}

/// Every admissible `(part, γ)` with `γ1 <= g1_max`, sharing sup-norms.
pub fn ratio_bound_sweep(g1_max: u32, config: &SearchConfig) -> Result<Vec<RatioBound>> {
    let mut cache: BTreeMap<GammaIndex, f64> = BTreeMap::new();
    let mut norm = |g: GammaIndex| -> Result<f64> {
        if let Some(&v) = cache.get(&g) {
            return Ok(v);
        }
        let v = sup_norm(GammaSurrogate::from_gamma(g), config)?.value;
        cache.insert(g, v);
        Ok(v)
    };
    let mut out = Vec::new();
    for mv in MoveType::ALL {
        for gamma in gamma_up_to(g1_max).filter(|&g| mv.region_holds(g)) {
            out.push(ratio_from(mv, gamma, &mut norm)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: u32, b: u32, c: u32) -> GammaIndex {
        GammaIndex::new(a, b, c).unwrap()
    }

    #[test]
    fn maximizer_examples() {
        assert_eq!(theta_maximizer(1, 0).unwrap().coords(), [0.5; 4]);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let p = theta_maximizer(0, 1).unwrap().coords();
        assert_eq!(p[0], 0.0);
        assert!((p[2] - h).abs() < 1e-15 && (p[3] - h).abs() < 1e-15);
        let q = theta_maximizer(2, 1).unwrap().coords();
        assert!((q[0] - 0.408248290463863).abs() < 1e-12);
        assert!((q[2] - 0.577350269189626).abs() < 1e-12);
        assert_eq!(theta_maximizer(0, 0), Err(Error::ZeroSurrogate));
    }

    #[test]
    fn part_examples() {
        let cfg = SearchConfig::default();
        let p1 = ratio_bound(1, g(1, 1, 0), &cfg).unwrap();
        assert!((p1.ratio - 2.0).abs() < 1e-6);
        let p3 = ratio_bound(3, g(1, 0, 0), &cfg).unwrap();
        assert_eq!(p3.ratio, 1.0);
        let p2 = ratio_bound(2, g(1, 1, 0), &cfg).unwrap();
        let expected = 0.5 / (3.0 * libm::sqrt(3.0) / 32.0);
        assert!((p2.ratio - expected).abs() < 1e-6 && p2.within_cap);
    }

    #[test]
    fn region_and_part_errors() {
        let cfg = SearchConfig::default();
        assert_eq!(ratio_bound(1, g(2, 1, 0), &cfg), Err(Error::RegionViolated(2, 1, 0, 1)));
        assert_eq!(ratio_bound(0, g(0, 0, 0), &cfg), Err(Error::InvalidPart(0)));
    }
}
