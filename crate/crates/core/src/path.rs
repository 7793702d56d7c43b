//! Constructive paths through `Γ` and the linear growth bound for equivariant
//! Dirac eigenvalues.
//!
//! Four moves connect neighbouring blocks. Along each move the eigenvalues of
//! any equivariant Dirac operator with bounded commutators change by at most
//! a fixed `c`, and every `γ` is reached from the origin in at most `γ1`
//! moves, so `|d^γ| <= |d^0| + c·γ1`.

use alloc::vec::Vec;
use core::fmt;

use crate::rep::{gamma_up_to, GammaIndex};
use crate::spectrum::DiracAssignment;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveType {
    /// `+ε1+ε2` from `γ1 = γ2, γ3 = 0`.
    Diagonal,
    /// `+2ε1+ε3` from `γ1 - γ2 - 2γ3 = 0`.
    Balanced,
    /// `+ε1` from `γ1 - γ2 - 2γ3 >= 0`.
    WStep,
    /// `+ε1+ε3` from `γ1 - γ2 - 2γ3 <= 0`.
    ZStep,
}

impl MoveType {
    pub const ALL: [MoveType; 4] = [MoveType::Diagonal, MoveType::Balanced, MoveType::WStep, MoveType::ZStep];

    /// Part number (1..=4) of the growth lemmas this move belongs to.
    pub fn part(self) -> u8 {
        match self {
            MoveType::Diagonal => 1,
            MoveType::Balanced => 2,
            MoveType::WStep => 3,
            MoveType::ZStep => 4,
        }
    }

    pub fn from_part(part: u8) -> Result<Self> {
        match part {
            1 => Ok(MoveType::Diagonal),
            2 => Ok(MoveType::Balanced),
            3 => Ok(MoveType::WStep),
            4 => Ok(MoveType::ZStep),
            other => Err(Error::InvalidPart(other)),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MoveType::Diagonal => "M_1+2",
            MoveType::Balanced => "M_2+3",
            MoveType::WStep => "M_1",
            MoveType::ZStep => "M_1+3",
        }
    }

    pub fn step(self) -> (u32, u32, u32) {
        match self {
            MoveType::Diagonal => (1, 1, 0),
            MoveType::Balanced => (2, 0, 1),
            MoveType::WStep => (1, 0, 0),
            MoveType::ZStep => (1, 0, 1),
        }
    }

    pub fn region_holds(self, gamma: GammaIndex) -> bool {
        match self {
            MoveType::Diagonal => gamma.g1() == gamma.g2() && gamma.g3() == 0,
            MoveType::Balanced => gamma.balance() == 0,
            MoveType::WStep => gamma.balance() >= 0,
            MoveType::ZStep => gamma.balance() <= 0,
        }
    }

    /// Applies the move, refusing sources outside its region.
    pub fn apply(self, gamma: GammaIndex) -> Result<GammaIndex> {
        if !self.region_holds(gamma) {
            let (a, b, c) = gamma.as_tuple();
            return Err(Error::RegionViolated(a, b, c, self.part()));
        }
        let (d1, d2, d3) = self.step();
        // inside its region every move stays in Γ
        Ok(gamma.shifted(d1, d2, d3).expect("move leaves Γ from inside its region"))
    }
}

impl fmt::Display for MoveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathReport {
    pub target: GammaIndex,
    /// From the origin to `target`, both included.
    pub waypoints: Vec<GammaIndex>,
    pub moves: Vec<MoveType>,
}

impl PathReport {
    pub fn length(&self) -> usize {
        self.moves.len()
    }

    /// Every move starts inside its region, lands on the next waypoint, and
    /// the path is no longer than `γ1`.
    pub fn is_valid(&self) -> bool {
        self.waypoints.first() == Some(&GammaIndex::ORIGIN)
            && self.waypoints.last() == Some(&self.target)
            && self.waypoints.len() == self.moves.len() + 1
            && self
                .moves
                .iter()
                .zip(self.waypoints.windows(2))
                .all(|(m, w)| m.apply(w[0]).ok() == Some(w[1]))
            && self.length() <= self.target.g1() as usize
    }
}

/// Path from `(0,0,0)` to `γ` in three stages.
///
/// Stage 1 climbs the diagonal to `(γ2, γ2, 0)`. If `γ1 - γ2 - 2γ3 >= 0`
/// (the boundary case included) stage 2 takes `γ3` balanced moves to
/// `(γ2+2γ3, γ2, γ3)` and stage 3 finishes with `w`-steps. Otherwise stage 2
/// takes `γ1-γ2-γ3` balanced moves to `(2γ1-γ2-2γ3, γ2, γ1-γ2-γ3)` and
/// stage 3 finishes with `z`-steps.
pub fn build_path(target: GammaIndex) -> PathReport {
    let (g1, g2, g3) = target.as_tuple();
    let mut plan: Vec<(MoveType, u32)> = Vec::with_capacity(3);
    plan.push((MoveType::Diagonal, g2));
    if target.balance() >= 0 {
        plan.push((MoveType::Balanced, g3));
        plan.push((MoveType::WStep, g1 - g2 - 2 * g3));
    } else {
        let w_exp = g1 - g2 - g3;
        plan.push((MoveType::Balanced, w_exp));
        plan.push((MoveType::ZStep, g3 - w_exp));
    }

    let mut current = GammaIndex::ORIGIN;
    let mut waypoints = alloc::vec![current];
    let mut moves = Vec::new();
    for (mv, count) in plan {
        for _ in 0..count {
            current = mv.apply(current).expect("path stages respect move regions");
            waypoints.push(current);
            moves.push(mv);
        }
    }
    debug_assert_eq!(current, target);
    PathReport {
        target,
        waypoints,
        moves,
    }
}

/// `|d0| + c·len(path to γ)`, a bound on `|d^γ|` for any assignment whose
/// per-move differences are below `c`.
pub fn eigenvalue_bound(d0: f64, c: f64, gamma: GammaIndex) -> Result<f64> {
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidArgument("step bound c must be positive".into()));
    }
    Ok(libm::fabs(d0) + c * build_path(gamma).length() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepBounds {
    pub g1_max: u32,
    /// `sup |d^(γ+step) - d^γ|` over each move's region, indexed by part - 1.
    pub suprema: [f64; 4],
}

impl StepBounds {
    pub fn max(&self) -> f64 {
        self.suprema.iter().copied().fold(0.0, f64::max)
    }

    pub fn all_finite(&self) -> bool {
        self.suprema.iter().all(|s| s.is_finite())
    }

    /// The strict threshold used for the graph: largest observed step plus one.
    pub fn threshold(&self) -> f64 {
        self.max() + 1.0
    }
}

/// Observed per-move eigenvalue jumps over all sources with `γ1 <= g1_max`.
/// `d` is queried up to `γ1 = g1_max + 2`.
pub fn verify_step_bounds<D: DiracAssignment + ?Sized>(d: &D, g1_max: u32) -> StepBounds {
    let mut suprema = [0.0f64; 4];
    for gamma in gamma_up_to(g1_max) {
        let here = d.eigenvalue(gamma);
        for mv in MoveType::ALL {
            if let Ok(next) = mv.apply(gamma) {
                let jump = libm::fabs(d.eigenvalue(next) - here);
                let slot = &mut suprema[mv.part() as usize - 1];
                *slot = slot.max(jump);
            }
        }
    }
    StepBounds { g1_max, suprema }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub c: f64,
    pub checked: usize,
    pub violations: Vec<GammaIndex>,
    /// Smallest `|d0| + c·γ1 - |d^γ|` seen.
    pub min_slack: f64,
}

impl GrowthReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `|d^γ| <= |d0| + c·len(path) <= |d0| + c·γ1` for all `γ1 <= g1_max`.
pub fn verify_growth<D: DiracAssignment + ?Sized>(d: &D, c: f64, g1_max: u32) -> Result<GrowthReport> {
    let d0 = d.eigenvalue(GammaIndex::ORIGIN);
    let mut violations = Vec::new();
    let mut min_slack = f64::INFINITY;
    let mut checked = 0;
    for gamma in gamma_up_to(g1_max) {
        checked += 1;
        let value = libm::fabs(d.eigenvalue(gamma));
        let path_bound = eigenvalue_bound(d0, c, gamma)?;
        let linear = libm::fabs(d0) + c * f64::from(gamma.g1());
        if value > path_bound || path_bound > linear {
            violations.push(gamma);
        }
        min_slack = min_slack.min(linear - value);
    }
    Ok(GrowthReport {
        c,
        checked,
        violations,
        min_slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::EquivariantDirac;

    fn g(a: u32, b: u32, c: u32) -> GammaIndex {
        GammaIndex::new(a, b, c).unwrap()
    }

    #[test]
    fn origin_path_is_empty() {
        let p = build_path(GammaIndex::ORIGIN);
        assert_eq!(p.length(), 0);
        assert_eq!(p.waypoints, alloc::vec![GammaIndex::ORIGIN]);
        assert!(p.is_valid());
    }

    #[test]
    fn balanced_target() {
        let p = build_path(g(3, 1, 1));
        assert_eq!(p.waypoints, alloc::vec![g(0, 0, 0), g(1, 1, 0), g(3, 1, 1)]);
        assert_eq!(p.moves, alloc::vec![MoveType::Diagonal, MoveType::Balanced]);
        assert!(p.is_valid());
    }

    #[test]
    fn z_heavy_target() {
        let p = build_path(g(2, 0, 2));
        assert_eq!(p.waypoints, alloc::vec![g(0, 0, 0), g(1, 0, 1), g(2, 0, 2)]);
        assert_eq!(p.moves, alloc::vec![MoveType::ZStep, MoveType::ZStep]);
    }

    #[test]
    fn region_is_enforced() {
        assert_eq!(
            MoveType::Diagonal.apply(g(2, 1, 0)),
            Err(Error::RegionViolated(2, 1, 0, 1))
        );
        assert_eq!(MoveType::from_part(5), Err(Error::InvalidPart(5)));
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(eigenvalue_bound(-2.5, 7.0, GammaIndex::ORIGIN), Ok(2.5));
        assert_eq!(eigenvalue_bound(0.0, 3.0, g(3, 1, 1)), Ok(6.0));
        for k in 0..10 {
            assert_eq!(eigenvalue_bound(0.0, 3.0, g(k, k, 0)), Ok(3.0 * k as f64));
        }
        assert!(eigenvalue_bound(0.0, 0.0, g(1, 0, 0)).is_err());
    }

    #[test]
    fn equivariant_dirac_steps() {
        let b = verify_step_bounds(&EquivariantDirac, 20);
        assert_eq!(b.suprema, [1.0, 2.0, 1.0, 1.0]);
        let zero = verify_step_bounds(&|_: GammaIndex| 0.0, 20);
        assert_eq!(zero.suprema, [0.0; 4]);
    }

    #[test]
    fn stage_three_only_is_tight() {
        for k in 0..30 {
            let p = build_path(g(k, 0, 0));
            assert_eq!(p.length(), k as usize);
            assert_eq!(EquivariantDirac.eigenvalue(g(k, 0, 0)), p.length() as f64);
        }
    }
}
