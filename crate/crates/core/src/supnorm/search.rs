use core::f64::consts::FRAC_PI_2;

use alloc::vec::Vec;

use super::{GammaSurrogate, Target, ThetaPoint};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Points per axis of the reduced `(ρ, φ)` grid.
    pub resolution: usize,
    /// Zoom rounds; each re-grids `±1` spacing around the incumbent.
    pub refine_rounds: usize,
    /// Points per spherical angle of the 4D cross-check grid.
    pub cross_check_resolution: usize,
    /// Allowed excess of the cross-check maximum over the reduced maximum.
    pub tolerance: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            resolution: 200,
            refine_rounds: 3,
            cross_check_resolution: 40,
            tolerance: 1e-7,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.resolution < 2 || self.cross_check_resolution < 2 {
            return Err(Error::InvalidArgument("grid resolution must be at least 2".into()));
        }
        if self.tolerance.is_nan() || self.tolerance < 0.0 {
            return Err(Error::InvalidArgument("tolerance must be nonnegative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupNorm {
    pub value: f64,
    pub argmax: ThetaPoint,
    /// Best value of the coarse grid over all of `Θ`.
    pub cross_check: f64,
}

/// Supremum of a surrogate over `Θ`.
///
/// Fails with [`Error::SymmetryViolated`] if the 4D grid beats the reduced
/// search by more than `config.tolerance`.
pub fn sup_norm(target: impl Into<Target>, config: &SearchConfig) -> Result<SupNorm> {
    config.validate()?;
    let target = target.into();
    let (value, argmax) = reduced_search(&target, config);
    let cross_check = full_grid_max(&target, config.cross_check_resolution);
    if cross_check > value + config.tolerance {
        return Err(Error::SymmetryViolated {
            reduced_value: value,
            grid_value: cross_check,
            tolerance: config.tolerance,
        });
    }
    Ok(SupNorm {
        value,
        argmax,
        cross_check,
    })
}

/// Like [`sup_norm`], but when `f` has a continuum of maximizers returns the
/// one where `|prefer|` is largest.
///
/// In `(ρ, φ)` the surrogate factors as `P(ρ)·Q(φ)`. `Q` is constant exactly
/// when `f` has no `z` or `w` factor and `P` is constant only for `f ≡ 1`;
/// those are the only flat directions, and the secondary search runs over
/// them with the other coordinate pinned.
pub fn sup_norm_preferring(f: GammaSurrogate, prefer: impl Into<Target>, config: &SearchConfig) -> Result<SupNorm> {
    let base = sup_norm(f, config)?;
    let free_phi = f.z_exp == 0 && f.w_exp == 0;
    let free_rho = f == GammaSurrogate::ONE;
    if !free_phi {
        return Ok(base);
    }
    let prefer = prefer.into();
    let (rho_star, phi_star) = reduced_coords(&base.argmax);
    let rho_range = if free_rho { (0.0, 1.0) } else { (rho_star, rho_star) };
    let phi_range = if free_phi {
        (0.0, FRAC_PI_2)
    } else {
        (phi_star, phi_star)
    };
    let (_, rho, phi) = search_box(
        |r, p| libm::fabs(prefer.eval(&f.reduced(r, p))),
        rho_range,
        phi_range,
        config,
    );
    Ok(SupNorm {
        argmax: f.reduced(rho, phi),
        ..base
    })
}

fn reduced_coords(p: &ThetaPoint) -> (f64, f64) {
    let rho = libm::sqrt(p.z() * p.z() + p.w() * p.w());
    (rho, libm::atan2(p.z(), p.w()))
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(move |i| if i + 1 == n { hi } else { lo + step * i as f64 })
}

fn reduced_search(target: &Target, config: &SearchConfig) -> (f64, ThetaPoint) {
    let (top, rho, phi) = search_box(
        |r, p| target.eval(&target.reduced(r, p)),
        (0.0, 1.0),
        (0.0, FRAC_PI_2),
        config,
    );
    (top, target.reduced(rho, phi))
}

/// Grid search with zoom over a `(ρ, φ)` box; a degenerate range pins that
/// coordinate. Ties go to the lexicographically first grid index.
fn search_box(
    objective: impl Fn(f64, f64) -> f64,
    rho_range: (f64, f64),
    phi_range: (f64, f64),
    config: &SearchConfig,
) -> (f64, f64, f64) {
    let n = config.resolution;
    let (mut rho_lo, mut rho_hi) = rho_range;
    let (mut phi_lo, mut phi_hi) = phi_range;
    let mut best = (f64::NEG_INFINITY, rho_lo, phi_lo);
    for round in 0..=config.refine_rounds {
        for rho in linspace(rho_lo, rho_hi, n) {
            for phi in linspace(phi_lo, phi_hi, n) {
                let v = objective(rho, phi);
                if v > best.0 {
                    best = (v, rho, phi);
                }
            }
        }
        if round == config.refine_rounds {
            break;
        }
        let d_rho = (rho_hi - rho_lo) / (n - 1) as f64;
        let d_phi = (phi_hi - phi_lo) / (n - 1) as f64;
        rho_lo = (best.1 - d_rho).max(rho_range.0);
        rho_hi = (best.1 + d_rho).min(rho_range.1);
        phi_lo = (best.2 - d_phi).max(phi_range.0);
        phi_hi = (best.2 + d_phi).min(phi_range.1);
    }
    best
}

/// `x = cos a, y = sin a cos b, z = sin a sin b cos c, w = sin a sin b sin c`
/// over `[0, π/2]^3`.
fn full_grid_max(target: &Target, n: usize) -> f64 {
    let angles: Vec<(f64, f64)> = linspace(0.0, FRAC_PI_2, n)
        .map(|t| (libm::sin(t), libm::cos(t)))
        .collect();
    let mut best = f64::NEG_INFINITY;
    for &(sa, ca) in &angles {
        for &(sb, cb) in &angles {
            for &(sc, cc) in &angles {
                let p = ThetaPoint::clamped(ca, sa * cb, sa * sb * cc, sa * sb * sc);
                best = best.max(target.eval(&p));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supnorm::FmnSurrogate;

    #[test]
    fn coordinate_maximum() {
        let s = sup_norm(GammaSurrogate::new(0, 1, 0), &SearchConfig::default()).unwrap();
        assert_eq!(s.value, 1.0);
        assert_eq!(s.argmax.coords(), [0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn mixed_factor_is_one_half() {
        let s = sup_norm(GammaSurrogate::new(0, 0, 1), &SearchConfig::default()).unwrap();
        assert!((s.value - 0.5).abs() < 1e-12);
        let p = s.argmax;
        assert!((p.x() * p.w() + p.y() * p.z() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn preference_breaks_ties() {
        let cfg = SearchConfig::default();
        let s = sup_norm_preferring(GammaSurrogate::ONE, GammaSurrogate::new(0, 1, 0), &cfg).unwrap();
        assert_eq!(s.argmax.coords(), [0.0, 0.0, 0.0, 1.0]);
        let s = sup_norm_preferring(GammaSurrogate::new(0, 0, 1), GammaSurrogate::new(0, 1, 0), &cfg).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let [x, y, z, w] = s.argmax.coords();
        assert!((x - h).abs() < 1e-8 && y == 0.0 && z == 0.0 && (w - h).abs() < 1e-8);
    }

    #[test]
    fn f11_value() {
        let s = sup_norm(FmnSurrogate::new(1, 1).unwrap(), &SearchConfig::default()).unwrap();
        let expected = 3.0 * libm::sqrt(3.0) / 32.0;
        assert!((s.value - expected).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_config() {
        let cfg = SearchConfig {
            resolution: 1,
            ..SearchConfig::default()
        };
        assert!(sup_norm(GammaSurrogate::ONE, &cfg).is_err());
    }
}
