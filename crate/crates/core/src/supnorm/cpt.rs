use alloc::vec::Vec;

use super::search::sup_norm_preferring;
use super::{sup_norm, GammaSurrogate, SearchConfig, ThetaPoint};
use crate::Result;

/// Below this `|h(x0)|` counts as vanishing.
const VANISHING: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum CptOutcome {
    /// `h` vanishes at the maximizer of `|f|`; the inequality says nothing.
    PreconditionUnmet {
        maximizer: ThetaPoint,
    },
    Checked(CptReport),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CptReport {
    pub maximizer: ThetaPoint,
    /// `1 / |h(x0)|`.
    pub bound: f64,
    /// `‖h^m f‖ / ‖h^(m+1) f‖` for `m = 0..=m_max`.
    pub ratios: Vec<f64>,
    /// `|h(x_m)|` at the numerical maximizer of `|h^m f|`, `m = 0..=m_max+1`.
    pub h_at_maximizers: Vec<f64>,
    pub inequality_holds: bool,
    pub monotone: bool,
}

impl CptReport {
    pub fn passed(&self) -> bool {
        self.inequality_holds && self.monotone
    }
}

/// Checks `‖h^m f‖ / ‖h^(m+1) f‖ <= 1/|h(x0)|` for `m = 0..=m_max`, where
/// `x0` maximises `|f|`, together with `|h(x_m)| <= |h(x_(m+1))|`. Both
/// comparisons allow `tolerance`. When `|f|` has several maximizers, `x0` is
/// the one maximising `|h|`; precondition failure means `h` vanishes there.
pub fn cpt_ratio_check(
    f: GammaSurrogate,
    h: GammaSurrogate,
    m_max: u32,
    tolerance: f64,
    config: &SearchConfig,
) -> Result<CptOutcome> {
    // among several maximizers of |f| the one where |h| is largest gives the
    // sharpest bound
    let base = sup_norm_preferring(f, h, config)?;
    let h0 = libm::fabs(h.eval(&base.argmax));
    if h0 < VANISHING {
        return Ok(CptOutcome::PreconditionUnmet { maximizer: base.argmax });
    }
    let bound = 1.0 / h0;

    let mut norms = Vec::with_capacity(m_max as usize + 2);
    let mut h_at = Vec::with_capacity(m_max as usize + 2);
    norms.push(base.value);
    h_at.push(h0);
    for m in 1..=m_max + 1 {
        let s = sup_norm(h.pow(m) * f, config)?;
        norms.push(s.value);
        h_at.push(libm::fabs(h.eval(&s.argmax)));
    }
    let ratios: Vec<f64> = norms.windows(2).map(|w| w[0] / w[1]).collect();
    let inequality_holds = ratios.iter().all(|&r| r <= bound + tolerance);
    let monotone = h_at.windows(2).all(|w| w[0] <= w[1] + tolerance);
    Ok(CptOutcome::Checked(CptReport {
        maximizer: base.argmax,
        bound,
        ratios,
        h_at_maximizers: h_at,
        inequality_holds,
        monotone,
    }))
}
