use alloc::vec;
use alloc::vec::Vec;

use super::{dominant_weights, HighestWeight};
use crate::{Error, Result};

/// Multiplicity of the `Sp(2n-2)` irreducible `μ` in the restriction of the
/// `Sp(2n)` irreducible `λ`.
///
/// Counts the integer sequences `ν = (ν_1..ν_n)` with
/// `λ_1 >= ν_1 >= λ_2 >= ν_2 >= ... >= λ_n >= ν_n >= 0` and
/// `ν_1 >= μ_1 >= ν_2 >= ... >= μ_{n-1} >= ν_n`, by enumerating every
/// `ν` in the box `[0, λ_1]^n`.
pub fn branching_multiplicity(lambda: &HighestWeight, mu: &HighestWeight) -> Result<u64> {
    let n = lambda.rank();
    if n < 2 {
        return Err(Error::UnsupportedRank(n));
    }
    mu.expect_rank(n - 1)?;
    Ok(count_interlacing(lambda.entries(), mu.entries()))
}

fn count_interlacing(lambda: &[u32], mu: &[u32]) -> u64 {
    let n = lambda.len();
    let bound = lambda[0];
    let mut nu = vec![0u32; n];
    let mut count = 0;
    loop {
        if interlaces(lambda, &nu, mu) {
            count += 1;
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            if nu[i] < bound {
                nu[i] += 1;
                break;
            }
            nu[i] = 0;
            i += 1;
        }
    }
}

fn interlaces(lambda: &[u32], nu: &[u32], mu: &[u32]) -> bool {
    let n = lambda.len();
    (0..n).all(|i| {
        let below = lambda.get(i + 1).copied().unwrap_or(0);
        lambda[i] >= nu[i] && nu[i] >= below
    }) && (0..n - 1).all(|i| nu[i] >= mu[i] && mu[i] >= nu[i + 1])
}

/// Every `μ` occurring in the restriction of `λ`, with its multiplicity.
pub fn restriction(lambda: &HighestWeight) -> Result<Vec<(HighestWeight, u64)>> {
    let n = lambda.rank();
    if n < 2 {
        return Err(Error::UnsupportedRank(n));
    }
    Ok(dominant_weights(n - 1, lambda.first())
        .into_iter()
        .map(|mu| {
            let m = count_interlacing(lambda.entries(), mu.entries());
            (mu, m)
        })
        .filter(|(_, m)| *m > 0)
        .collect())
}

/// Number of copies of the `λ`-isotypic block in the functions on
/// `Sp(2n)/Sp(2n-2)`: `λ1 - λ2 + 1` when `λ_i = 0` for `i >= 3`, else 0.
pub fn trivial_isotypic_multiplicity(lambda: &HighestWeight) -> Result<u64> {
    let n = lambda.rank();
    if n < 2 {
        return Err(Error::UnsupportedRank(n));
    }
    let e = lambda.entries();
    if e[2..].iter().any(|&v| v != 0) {
        return Ok(0);
    }
    Ok(u64::from(e[0] - e[1]) + 1)
}
