//! Spectrum of the equivariant Dirac operator `D_eq : e^γ_i ↦ γ1 e^γ_i` on
//! `L^2` of the quaternion sphere, and its summability.
//!
//! The eigenvalue `k` is carried by every block `γ` with `γ1 = k`; its total
//! multiplicity `M(k)` is the sum of the dimensions of those blocks. `M` is a
//! polynomial of degree `4n - 2` in `k`, so `Σ M(k) k^(-δ)` converges exactly
//! for `δ > 4n - 1`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::float::{scaled_power_term, CompensatedSum};
use crate::rep::{GammaIndex, WeylFormula};
use crate::{Error, Result};

/// Eigenvalue `k` of `D_eq` together with its exact multiplicity `M(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumLevel {
    pub eigenvalue: u32,
    pub multiplicity: BigUint,
}

/// Eigenvalues `d^γ` of an equivariant Dirac operator, constant on each
/// isotypic block.
pub trait DiracAssignment {
    fn eigenvalue(&self, gamma: GammaIndex) -> f64;
}

impl<F: Fn(GammaIndex) -> f64> DiracAssignment for F {
    fn eigenvalue(&self, gamma: GammaIndex) -> f64 {
        self(gamma)
    }
}

/// `d^γ = γ1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct EquivariantDirac;

impl DiracAssignment for EquivariantDirac {
    fn eigenvalue(&self, gamma: GammaIndex) -> f64 {
        f64::from(gamma.g1())
    }
}

fn check_rank(rank: usize) -> Result<()> {
    if rank < 2 {
        return Err(Error::UnsupportedRank(rank));
    }
    Ok(())
}

/// Level multiplicities for a fixed rank; reuses the Weyl denominator.
#[derive(Debug, Clone)]
pub struct Spectrum {
    weyl: WeylFormula,
}

impl Spectrum {
    pub fn new(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(Self {
            weyl: WeylFormula::new(rank),
        })
    }

    pub fn rank(&self) -> usize {
        self.weyl.rank()
    }

    /// `M(k) = Σ_{γ2=0}^{k} (k - γ2 + 1) · dim(k, γ2, 0, .., 0)`.
    pub fn level(&self, k: u32) -> SpectrumLevel {
        let mut entries = alloc::vec![0u32; self.rank()];
        entries[0] = k;
        let mut total = BigUint::zero();
        for g2 in 0..=k {
            entries[1] = g2;
            total += self.weyl.dimension_of_entries(&entries) * (k - g2 + 1);
        }
        SpectrumLevel {
            eigenvalue: k,
            multiplicity: total,
        }
    }

    /// Levels `0..=k_max` in order.
    pub fn table(&self, k_max: u32) -> Vec<SpectrumLevel> {
        (0..=k_max).map(|k| self.level(k)).collect()
    }
}

pub fn level_multiplicity(rank: usize, k: u32) -> Result<SpectrumLevel> {
    Ok(Spectrum::new(rank)?.level(k))
}

/// Nonzero confirming entries required in the vanishing difference row.
const MIN_VANISHING_ENTRIES: usize = 2;

/// Degree of the polynomial interpolating `values` at consecutive integers:
/// the least `p` whose `(p+1)`-th forward difference vanishes identically
/// (over at least two entries) while the `p`-th is a nonzero constant.
pub fn polynomial_degree(values: &[BigUint]) -> Result<usize> {
    let required = MIN_VANISHING_ENTRIES + 1;
    if values.len() < required {
        return Err(Error::InsufficientSamples {
            samples: values.len(),
            required,
        });
    }
    let mut row: Vec<BigInt> = values.iter().cloned().map(BigInt::from).collect();
    if row.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument("identically zero sequence has no degree".into()));
    }
    for p in 0.. {
        let next: Vec<BigInt> = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        if next.len() < MIN_VANISHING_ENTRIES {
            break;
        }
        if next.iter().all(Zero::is_zero) {
            return Ok(p);
        }
        row = next;
    }
    Err(Error::NonPolynomial { samples: values.len() })
}

/// Detects `deg M` from `M(0..=k_max)`; needs `k_max >= 4n + 2`.
pub fn multiplicity_polynomial_degree(rank: usize, k_max: u32) -> Result<usize> {
    let spectrum = Spectrum::new(rank)?;
    let required = 4 * rank + 2;
    if (k_max as usize) < required {
        return Err(Error::InsufficientSamples {
            samples: k_max as usize + 1,
            required: required + 1,
        });
    }
    degree_of_levels(&spectrum.table(k_max))
}

pub fn degree_of_levels(levels: &[SpectrumLevel]) -> Result<usize> {
    let values: Vec<BigUint> = levels.iter().map(|l| l.multiplicity.clone()).collect();
    polynomial_degree(&values)
}

/// `Σ_{k=1}^{K} M(k) k^(-δ)`; the kernel (`k = 0`) is excluded.
pub fn zeta_partial_sum(rank: usize, delta: f64, cutoff: u32) -> Result<f64> {
    let spectrum = Spectrum::new(rank)?;
    check_delta(delta)?;
    let mut sum = CompensatedSum::new();
    for k in 1..=cutoff {
        sum.add(zeta_term(&spectrum.level(k), delta));
    }
    Ok(sum.value())
}

fn check_delta(delta: f64) -> Result<()> {
    if !delta.is_finite() || delta <= 0.0 {
        return Err(Error::InvalidArgument("δ must be a positive real".into()));
    }
    Ok(())
}

fn zeta_term(level: &SpectrumLevel, delta: f64) -> f64 {
    if level.eigenvalue == 0 {
        return 0.0;
    }
    scaled_power_term(&level.multiplicity, u64::from(level.eigenvalue), delta)
}

/// Partial sums of the zeta series over a precomputed table, one per cutoff.
///
/// `levels[k]` must carry eigenvalue `k`, and every cutoff must lie inside
/// the table. Cutoffs may come in any order; terms are always accumulated in
/// increasing `k`.
pub fn zeta_partial_sums(levels: &[SpectrumLevel], delta: f64, cutoffs: &[u32]) -> Result<Vec<f64>> {
    check_delta(delta)?;
    check_table(levels, cutoffs)?;
    let max = cutoffs.iter().copied().max().unwrap_or(0);
    let mut running = Vec::with_capacity(max as usize + 1);
    let mut sum = CompensatedSum::new();
    running.push(0.0);
    for level in levels.iter().take(max as usize + 1).skip(1) {
        sum.add(zeta_term(level, delta));
        running.push(sum.value());
    }
    Ok(cutoffs.iter().map(|&c| running[c as usize]).collect())
}

fn check_table(levels: &[SpectrumLevel], cutoffs: &[u32]) -> Result<()> {
    if let Some((i, l)) = levels.iter().enumerate().find(|(i, l)| l.eigenvalue as usize != *i) {
        return Err(Error::InvalidArgument(alloc::format!(
            "table entry {i} carries eigenvalue {}",
            l.eigenvalue
        )));
    }
    if let Some(&c) = cutoffs.iter().find(|&&c| c as usize >= levels.len()) {
        return Err(Error::InvalidArgument(alloc::format!("cutoff {c} exceeds the table")));
    }
    Ok(())
}

/// Tail `Σ_{k=K+1}^{2K} M(k) k^(-δ)` against an integral-comparison bound.
///
/// With `C = max_{K<k<=2K} M(k)/k^p` the tail is at most
/// `C ∫_K^∞ t^(p-δ) dt = C K^(p+1-δ) / (δ-p-1)` because `k^(p-δ)` decreases.
#[derive(Debug, Clone, PartialEq)]
pub struct TailCheck {
    pub delta: f64,
    pub cutoff: u32,
    pub tail: f64,
    pub lead_constant: f64,
    pub bound: f64,
    pub within_bound: bool,
}

pub fn tail_check(levels: &[SpectrumLevel], degree: usize, delta: f64, cutoff: u32) -> Result<TailCheck> {
    check_delta(delta)?;
    let excess = delta - degree as f64 - 1.0;
    if excess <= 0.0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "δ = {delta} does not exceed deg M + 1 = {}",
            degree + 1
        )));
    }
    if cutoff == 0 {
        return Err(Error::InvalidArgument("tail cutoff must be positive".into()));
    }
    check_table(levels, &[2 * cutoff])?;
    let mut tail = CompensatedSum::new();
    let mut lead = 0.0f64;
    for level in &levels[cutoff as usize + 1..=2 * cutoff as usize] {
        tail.add(zeta_term(level, delta));
        lead = lead.max(scaled_power_term(
            &level.multiplicity,
            u64::from(level.eigenvalue),
            degree as f64,
        ));
    }
    let bound = lead * libm::pow(f64::from(cutoff), degree as f64 + 1.0 - delta) / excess;
    let tail = tail.value();
    Ok(TailCheck {
        delta,
        cutoff,
        tail,
        lead_constant: lead,
        bound,
        within_bound: tail < bound,
    })
}

/// Growth of the zeta series at a divergent exponent.
///
/// Two views are kept. The partial-sum ratio `S(2K)/S(K)` is dominated by
/// the first few levels unless `K` is huge, so it is informational. The
/// dyadic block ratio `B(2K)/B(K)` with `B(K) = Σ_{K<k<=2K} M(k) k^(-δ)`
/// tends to `2^(1+p-δ)`, which is `2` at `δ = p` and at most `1` once the
/// series converges; it carries the verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthCheck {
    pub delta: f64,
    pub cutoff: u32,
    pub sum_at_cutoff: f64,
    pub sum_at_double: f64,
    pub partial_sum_ratio: f64,
    pub partial_sums_exceed_threshold: bool,
    pub block_at_cutoff: f64,
    pub block_at_double: f64,
    pub block_ratio: f64,
    pub blocks_exceed_threshold: bool,
}

/// Multiplicative growth demanded of `S(2K)/S(K)` and `B(2K)/B(K)`.
pub const DIVERGENCE_GROWTH_THRESHOLD: f64 = 1.5;

/// Needs the table to reach `4K`.
pub fn growth_check(levels: &[SpectrumLevel], delta: f64, cutoff: u32) -> Result<GrowthCheck> {
    check_delta(delta)?;
    if cutoff == 0 {
        return Err(Error::InvalidArgument("growth cutoff must be positive".into()));
    }
    check_table(levels, &[4 * cutoff])?;
    let sums = zeta_partial_sums(levels, delta, &[cutoff, 2 * cutoff])?;
    let block = |lo: u32, hi: u32| {
        let mut s = CompensatedSum::new();
        s.extend(
            levels[lo as usize + 1..=hi as usize]
                .iter()
                .map(|l| zeta_term(l, delta)),
        );
        s.value()
    };
    let b1 = block(cutoff, 2 * cutoff);
    let b2 = block(2 * cutoff, 4 * cutoff);
    let ratio = sums[1] / sums[0];
    Ok(GrowthCheck {
        delta,
        cutoff,
        sum_at_cutoff: sums[0],
        sum_at_double: sums[1],
        partial_sum_ratio: ratio,
        partial_sums_exceed_threshold: ratio > DIVERGENCE_GROWTH_THRESHOLD,
        block_at_cutoff: b1,
        block_at_double: b2,
        block_ratio: b2 / b1,
        blocks_exceed_threshold: b2 / b1 > DIVERGENCE_GROWTH_THRESHOLD,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartialSum {
    pub delta: f64,
    pub cutoff: u32,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct SummabilityConfig {
    /// Last level used for degree detection; defaults to `4n + 8`.
    pub k_max: Option<u32>,
    /// Cutoffs `K`; evidence is gathered between each `K` and `2K`.
    pub cutoffs: Vec<u32>,
}

impl Default for SummabilityConfig {
    fn default() -> Self {
        Self {
            k_max: None,
            cutoffs: alloc::vec![250, 500],
        }
    }
}

#[derive(Debug, Clone)]
pub struct SummabilityReport {
    pub rank: usize,
    pub k_max: u32,
    pub polynomial_degree: usize,
    pub spectral_dimension: usize,
    pub partial_sums: Vec<PartialSum>,
    /// Growth at `δ = deg M`.
    pub divergence: Vec<GrowthCheck>,
    /// Tails at `δ = deg M + 2` against their integral bounds.
    pub convergence: Vec<TailCheck>,
    pub degree_matches: bool,
    pub divergence_evidenced: bool,
    pub convergence_evidenced: bool,
}

impl SummabilityReport {
    pub fn passed(&self) -> bool {
        self.degree_matches && self.divergence_evidenced && self.convergence_evidenced
    }
}

pub fn spectral_dimension(rank: usize) -> Result<SummabilityReport> {
    spectral_dimension_with(rank, &SummabilityConfig::default())
}

/// Builds the table once and derives the exact degree and both kinds of
/// numerical evidence from it.
pub fn spectral_dimension_with(rank: usize, config: &SummabilityConfig) -> Result<SummabilityReport> {
    let spectrum = Spectrum::new(rank)?;
    let k_max = config.k_max.unwrap_or(4 * rank as u32 + 8);
    let top = config.cutoffs.iter().map(|&c| 4 * c).max().unwrap_or(0).max(k_max);
    let levels = spectrum.table(top);
    from_levels(rank, k_max, &levels, &config.cutoffs)
}

/// Same as [`spectral_dimension_with`] over a table computed elsewhere, e.g.
/// in parallel. `levels` must cover `max(k_max, 4·max cutoff)`.
pub fn from_levels(rank: usize, k_max: u32, levels: &[SpectrumLevel], cutoffs: &[u32]) -> Result<SummabilityReport> {
    check_rank(rank)?;
    let required = 4 * rank as u32 + 2;
    if k_max < required {
        return Err(Error::InsufficientSamples {
            samples: k_max as usize + 1,
            required: required as usize + 1,
        });
    }
    check_table(levels, &[k_max])?;
    let degree = degree_of_levels(&levels[..=k_max as usize])?;
    let divergent = degree as f64;
    let convergent = degree as f64 + 2.0;

    let mut partial_sums = Vec::new();
    let mut divergence = Vec::new();
    let mut convergence = Vec::new();
    for &cutoff in cutoffs {
        let growth = growth_check(levels, divergent, cutoff)?;
        partial_sums.push(PartialSum {
            delta: divergent,
            cutoff,
            value: growth.sum_at_cutoff,
        });
        partial_sums.push(PartialSum {
            delta: divergent,
            cutoff: 2 * cutoff,
            value: growth.sum_at_double,
        });
        divergence.push(growth);
        let sums = zeta_partial_sums(levels, convergent, &[cutoff, 2 * cutoff])?;
        partial_sums.push(PartialSum {
            delta: convergent,
            cutoff,
            value: sums[0],
        });
        partial_sums.push(PartialSum {
            delta: convergent,
            cutoff: 2 * cutoff,
            value: sums[1],
        });
        convergence.push(tail_check(levels, degree, convergent, cutoff)?);
    }

    Ok(SummabilityReport {
        rank,
        k_max,
        polynomial_degree: degree,
        spectral_dimension: degree + 1,
        degree_matches: degree == 4 * rank - 2,
        divergence_evidenced: divergence.iter().all(|g| g.blocks_exceed_threshold),
        convergence_evidenced: convergence.iter().all(|t| t.within_bound),
        partial_sums,
        divergence,
        convergence,
    })
}

/// Lossy view of a multiplicity, for display.
pub fn approximate(m: &BigUint) -> f64 {
    m.to_f64().unwrap_or(f64::INFINITY)
}
