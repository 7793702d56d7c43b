use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::HighestWeight;
use crate::{Error, Result};

/// Weyl's dimension formula for type `C_n` with the denominator (the same
/// product evaluated at `ρ`) computed once.
///
/// With `l_i = λ_i + n - i + 1`, the dimension is
/// `Π_i l_i · Π_{i<j} (l_i - l_j)(l_i + l_j)` divided by the same product at
/// `λ = 0`.
#[derive(Debug, Clone)]
pub struct WeylFormula {
    rank: usize,
    denominator: BigUint,
}

impl WeylFormula {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        let zero = alloc::vec![0u32; rank];
        Self {
            rank,
            denominator: root_product(&zero),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dimension(&self, weight: &HighestWeight) -> Result<BigUint> {
        weight.expect_rank(self.rank)?;
        Ok(self.dimension_of_entries(weight.entries()))
    }

    /// Skips validation; `entries` must be dominant and of the right rank.
    pub(crate) fn dimension_of_entries(&self, entries: &[u32]) -> BigUint {
        debug_assert_eq!(entries.len(), self.rank);
        let (quotient, remainder) = root_product(entries).div_rem(&self.denominator);
        debug_assert!(remainder.is_zero());
        quotient
    }
}

fn root_product(entries: &[u32]) -> BigUint {
    let n = entries.len();
    let shifted: Vec<u64> = entries
        .iter()
        .enumerate()
        .map(|(i, &e)| u64::from(e) + (n - i) as u64)
        .collect();
    let mut acc = ChunkedProduct::default();
    for (i, &li) in shifted.iter().enumerate() {
        acc.push(li);
        for &lj in &shifted[i + 1..] {
            acc.push(li - lj);
            acc.push(li + lj);
        }
    }
    acc.finish()
}

/// Multiplies small factors in a machine word and only touches the big
/// integer when the word would overflow.
#[derive(Default)]
struct ChunkedProduct {
    word: Option<u64>,
    big: Option<BigUint>,
}

impl ChunkedProduct {
    fn push(&mut self, factor: u64) {
        let word = self.word.unwrap_or(1);
        match word.checked_mul(factor) {
            Some(w) => self.word = Some(w),
            None => {
                self.flush(word);
                self.word = Some(factor);
            }
        }
    }

    fn flush(&mut self, word: u64) {
        self.big = Some(match self.big.take() {
            Some(b) => b * word,
            None => BigUint::from(word),
        });
    }

    fn finish(mut self) -> BigUint {
        if let Some(w) = self.word.take() {
            self.flush(w);
        }
        self.big.unwrap_or_else(BigUint::one)
    }
}

/// Exact dimension of the irreducible `sp(2n)` module of highest weight `λ`.
pub fn weyl_dimension(rank: usize, weight: &HighestWeight) -> Result<BigUint> {
    if rank == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    WeylFormula::new(rank).dimension(weight)
}
