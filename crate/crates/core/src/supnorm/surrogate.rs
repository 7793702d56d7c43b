use core::ops::Mul;

use super::ThetaPoint;
use crate::rep::GammaIndex;
use crate::{Error, Result};

/// `z^z_exp · w^w_exp · (xw+yz)^mix_exp`.
///
/// Every exponent triple is `g^γ` for exactly one `γ ∈ Γ`, namely
/// `γ = (z_exp + w_exp + mix_exp, mix_exp, z_exp)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GammaSurrogate {
    pub z_exp: u32,
    pub w_exp: u32,
    pub mix_exp: u32,
}

impl GammaSurrogate {
    pub const ONE: Self = Self {
        z_exp: 0,
        w_exp: 0,
        mix_exp: 0,
    };

    pub fn new(z_exp: u32, w_exp: u32, mix_exp: u32) -> Self {
        Self { z_exp, w_exp, mix_exp }
    }

    pub fn from_gamma(gamma: GammaIndex) -> Self {
        Self {
            z_exp: gamma.g3(),
            w_exp: gamma.w_exponent(),
            mix_exp: gamma.g2(),
        }
    }

    pub fn gamma(self) -> GammaIndex {
        GammaIndex::new(self.z_exp + self.w_exp + self.mix_exp, self.mix_exp, self.z_exp)
            .expect("surrogate exponents always index Γ")
    }

    pub fn pow(self, k: u32) -> Self {
        Self {
            z_exp: self.z_exp * k,
            w_exp: self.w_exp * k,
            mix_exp: self.mix_exp * k,
        }
    }

    pub fn eval(self, p: &ThetaPoint) -> f64 {
        eval_parts(self, p.z(), p.w(), p.x() * p.w() + p.y() * p.z())
    }

    pub(crate) fn reduced(self, rho: f64, phi: f64) -> ThetaPoint {
        let (s, c) = (libm::sin(phi), libm::cos(phi));
        let r = libm::sqrt((1.0 - rho * rho).max(0.0));
        ThetaPoint::clamped(r * c, r * s, rho * s, rho * c)
    }
}

impl Mul for GammaSurrogate {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self {
            z_exp: self.z_exp + rhs.z_exp,
            w_exp: self.w_exp + rhs.w_exp,
            mix_exp: self.mix_exp + rhs.mix_exp,
        }
    }
}

fn eval_parts(g: GammaSurrogate, z: f64, w: f64, mix: f64) -> f64 {
    powu(z, g.z_exp) * powu(w, g.w_exp) * powu(mix, g.mix_exp)
}

// 0^0 = 1, which makes ONE the constant function.
fn powu(base: f64, exp: u32) -> f64 {
    let mut acc = 1.0;
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        b *= b;
        e >>= 1;
    }
    acc
}

/// `f_(m,n) = (zw)^n (xz+yw)^m`, `(m, n) ≠ (0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FmnSurrogate {
    m: u32,
    n: u32,
}

impl FmnSurrogate {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 && n == 0 {
            return Err(Error::ZeroSurrogate);
        }
        Ok(Self { m, n })
    }

    pub fn m(self) -> u32 {
        self.m
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn eval(self, p: &ThetaPoint) -> f64 {
        let zw = p.z() * p.w();
        let mix = p.x() * p.z() + p.y() * p.w();
        powu(zw, self.n) * powu(mix, self.m)
    }

    /// Swapping `x` and `y` turns `xz+yw` into `xw+yz`, so
    /// `f_(m,n)(x,y,z,w) = g(y,x,z,w)` for the surrogate returned here.
    pub fn swapped_gamma_form(self) -> GammaSurrogate {
        GammaSurrogate::new(self.n, self.n, self.m)
    }
}

/// Anything whose sup-norm [`super::sup_norm`] can compute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    Gamma(GammaSurrogate),
    Fmn(FmnSurrogate),
}

impl Target {
    pub fn eval(&self, p: &ThetaPoint) -> f64 {
        match self {
            Target::Gamma(g) => g.eval(p),
            Target::Fmn(f) => f.eval(p),
        }
    }

    pub(crate) fn reduced(&self, rho: f64, phi: f64) -> ThetaPoint {
        match self {
            Target::Gamma(g) => g.reduced(rho, phi),
            Target::Fmn(f) => f.swapped_gamma_form().reduced(rho, phi).swap_xy(),
        }
    }
}

impl From<GammaSurrogate> for Target {
    fn from(g: GammaSurrogate) -> Self {
        Target::Gamma(g)
    }
}

impl From<FmnSurrogate> for Target {
    fn from(f: FmnSurrogate) -> Self {
        Target::Fmn(f)
    }
}

/// `g^γ(p) = z^γ3 w^(γ1-γ2-γ3) (xw+yz)^γ2`.
pub fn eval_g(gamma: GammaIndex, p: &ThetaPoint) -> f64 {
    GammaSurrogate::from_gamma(gamma).eval(p)
}
