use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Dominant integral weight `λ1 >= λ2 >= ... >= λn >= 0` of `sp(2n)`, stored
/// densely in the orthogonal basis `ε_1..ε_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight {
    entries: Vec<u32>,
}

impl HighestWeight {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("weight of rank 0".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonDominant(entries));
        }
        Ok(Self { entries })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        Self { entries: vec![0; rank] }
    }

    /// `(first, second, 0, ..., 0)`, the shape of every weight occurring in the
    /// coordinate algebra of the quaternion sphere.
    pub fn two_row(rank: usize, first: u32, second: u32) -> Result<Self> {
        let mut entries = vec![0; rank];
        if rank >= 1 {
            entries[0] = first;
        }
        if rank >= 2 {
            entries[1] = second;
        } else if second != 0 {
            return Err(Error::InvalidArgument("second entry needs rank >= 2".into()));
        }
        Self::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn first(&self) -> u32 {
        self.entries[0]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub(crate) fn expect_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                actual: self.rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// All dominant weights of the given rank with `λ1 <= max_first`, in
/// lexicographic order of their entries.
pub fn dominant_weights(rank: usize, max_first: u32) -> Vec<HighestWeight> {
    fn extend(prefix: &mut Vec<u32>, rank: usize, cap: u32, out: &mut Vec<HighestWeight>) {
        if prefix.len() == rank {
            out.push(HighestWeight {
                entries: prefix.clone(),
            });
            return;
        }
        for v in 0..=cap {
            prefix.push(v);
            extend(prefix, rank, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if rank == 0 {
        return out;
    }
    extend(&mut Vec::with_capacity(rank), rank, max_first, &mut out);
    out
}
