use alloc::vec::Vec;
use core::fmt;

use super::HighestWeight;
use crate::{Error, Result};

/// Index `(γ1, γ2, γ3)` of an isotypic summand of the coordinate algebra of
/// the quaternion sphere: `(γ1, γ2)` is the highest weight, `γ3` picks the
/// copy. Always satisfies `γ2 <= γ1` and `γ3 <= γ1 - γ2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaIndex {
    g1: u32,
    g2: u32,
    g3: u32,
}

impl GammaIndex {
    pub const ORIGIN: Self = Self { g1: 0, g2: 0, g3: 0 };

    pub fn new(g1: u32, g2: u32, g3: u32) -> Result<Self> {
        if g2 > g1 || g3 > g1 - g2 {
            return Err(Error::InvalidGamma(g1, g2, g3));
        }
        Ok(Self { g1, g2, g3 })
    }

    pub fn g1(self) -> u32 {
        self.g1
    }

    pub fn g2(self) -> u32 {
        self.g2
    }

    pub fn g3(self) -> u32 {
        self.g3
    }

    pub fn as_tuple(self) -> (u32, u32, u32) {
        (self.g1, self.g2, self.g3)
    }

    /// `γ1 - γ2 - 2γ3`; its sign selects the region used by the growth lemmas.
    pub fn balance(self) -> i64 {
        i64::from(self.g1) - i64::from(self.g2) - 2 * i64::from(self.g3)
    }

    /// Exponent of `w` in the surrogate `z^γ3 w^(γ1-γ2-γ3) (xw+yz)^γ2`.
    pub fn w_exponent(self) -> u32 {
        self.g1 - self.g2 - self.g3
    }

    /// Adds `(d1, d2, d3)`, returning `None` if the result leaves `Γ`.
    pub fn shifted(self, d1: u32, d2: u32, d3: u32) -> Option<Self> {
        Self::new(self.g1 + d1, self.g2 + d2, self.g3 + d3).ok()
    }

    pub fn highest_weight(self, rank: usize) -> Result<HighestWeight> {
        if rank < 2 {
            return Err(Error::UnsupportedRank(rank));
        }
        HighestWeight::two_row(rank, self.g1, self.g2)
    }
}

impl fmt::Display for GammaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.g1, self.g2, self.g3)
    }
}

/// All `γ ∈ Γ` with `γ1 = k`, lexicographically ordered. There are
/// `(k+1)(k+2)/2` of them.
pub fn gamma_level(k: u32) -> Vec<GammaIndex> {
    let mut out = Vec::with_capacity(((k as usize + 1) * (k as usize + 2)) / 2);
    for g2 in 0..=k {
        for g3 in 0..=k - g2 {
            out.push(GammaIndex { g1: k, g2, g3 });
        }
    }
    out
}

/// All `γ ∈ Γ` with `γ1 <= k_max`, level by level.
pub fn gamma_up_to(k_max: u32) -> impl Iterator<Item = GammaIndex> {
    (0..=k_max).flat_map(gamma_level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn first_levels() {
        assert_eq!(gamma_level(0), vec![GammaIndex::ORIGIN]);
        let one: Vec<_> = gamma_level(1).into_iter().map(GammaIndex::as_tuple).collect();
        assert_eq!(one, vec![(1, 0, 0), (1, 0, 1), (1, 1, 0)]);
        assert_eq!(gamma_level(2).len(), 6);
    }

    #[test]
    fn level_sizes() {
        for k in 0..=100u32 {
            let expected = ((k + 1) * (k + 2) / 2) as usize;
            assert_eq!(gamma_level(k).len(), expected);
        }
    }

    #[test]
    fn validation() {
        assert!(GammaIndex::new(1, 2, 0).is_err());
        assert!(GammaIndex::new(2, 1, 2).is_err());
        assert!(GammaIndex::new(2, 1, 1).is_ok());
        assert_eq!(GammaIndex::new(3, 1, 1).unwrap().balance(), 0);
    }
}
