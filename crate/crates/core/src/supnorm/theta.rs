use crate::{Error, Result};

/// Allowed deviation of `x²+y²+z²+w²` from 1.
pub const SPHERE_TOLERANCE: f64 = 1e-12;

/// Point of `Θ`, the nonnegative octant of the unit 3-sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaPoint {
    x: f64,
    y: f64,
    z: f64,
    w: f64,
}

impl ThetaPoint {
    pub fn new(x: f64, y: f64, z: f64, w: f64) -> Result<Self> {
        let coords = [x, y, z, w];
        let norm = x * x + y * y + z * z + w * w;
        if coords.iter().any(|c| !(0.0..=1.0).contains(c)) || libm::fabs(norm - 1.0) > SPHERE_TOLERANCE {
            return Err(Error::OffTheta(x, y, z, w));
        }
        Ok(Self { x, y, z, w })
    }

    /// Trigonometric parameterisations land a few ulps outside `[0, 1]`.
    pub(crate) fn clamped(x: f64, y: f64, z: f64, w: f64) -> Self {
        let c = |v: f64| v.clamp(0.0, 1.0);
        Self {
            x: c(x),
            y: c(y),
            z: c(z),
            w: c(w),
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn swap_xy(self) -> Self {
        Self {
            x: self.y,
            y: self.x,
            ..self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_octant_and_sphere() {
        assert!(ThetaPoint::new(0.0, 0.0, 0.0, 1.0).is_ok());
        assert!(ThetaPoint::new(0.5, 0.5, 0.5, 0.5).is_ok());
        assert!(ThetaPoint::new(-0.0001, 0.0, 0.0, 1.0).is_err());
        assert!(ThetaPoint::new(0.5, 0.5, 0.5, 0.6).is_err());
        assert!(ThetaPoint::new(f64::NAN, 0.0, 0.0, 1.0).is_err());
    }
}
