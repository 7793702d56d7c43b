use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::generators::{apply_generator, build_generator_matrices, generator_index, GeneratorLabel};
use super::poly::{CoordinateVariable, Monomial, SymPolynomial};
use crate::{Error, Result};

/// `b^(λ1,λ2,j) = z^j w^(λ1-λ2-j) (xw - yz)^λ2` in rank `n`, expanded.
pub fn hwv_candidate(n: usize, lambda1: u32, lambda2: u32, j: u32) -> Result<SymPolynomial> {
    if n < 2 {
        return Err(Error::UnsupportedRank(n));
    }
    if lambda2 > lambda1 || j > lambda1 - lambda2 {
        return Err(Error::IndexOutOfRange(format!(
            "b^({lambda1},{lambda2},{j}) needs λ1 >= λ2 and j <= λ1 - λ2"
        )));
    }
    let [x, y, z, w] = [
        CoordinateVariable::x(n),
        CoordinateVariable::y(n),
        CoordinateVariable::z(n),
        CoordinateVariable::w(n),
    ]
    .map(SymPolynomial::var);
    let minor = &(&x * &w) - &(&y * &z);
    Ok(&(&z.pow(j) * &w.pow(lambda1 - lambda2 - j)) * &minor.pow(lambda2))
}

/// Exact check of the highest weight conditions for weight `(λ1, λ2, 0, ..)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HWVReport {
    pub rank: usize,
    pub lambda: (u32, u32),
    /// `j` when the polynomial came from [`hwv_candidate`].
    pub index: Option<u32>,
    /// `E_i(p) == 0` for `i = 1..=n`.
    pub annihilated: Vec<bool>,
    /// `c` with `H_i(p) = c·p` for `i = 1..=n`, or `None` when `p` is not an
    /// `H_i` eigenvector.
    pub h_eigenvalues: Vec<Option<i64>>,
    pub passed: bool,
}

impl HWVReport {
    /// Eigenvalues `H_i` must have: `λ1-λ2`, `λ2`, then zeros.
    pub fn expected_eigenvalues(&self) -> Vec<i64> {
        let (l1, l2) = self.lambda;
        let mut v = alloc::vec![0i64; self.rank];
        v[0] = i64::from(l1) - i64::from(l2);
        v[1] = i64::from(l2);
        v
    }
}

pub fn verify_highest_weight(p: &SymPolynomial, lambda1: u32, lambda2: u32, n: usize) -> Result<HWVReport> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("the zero polynomial has no weight".into()));
    }
    let gens = build_generator_matrices(n)?;
    let mut annihilated = Vec::with_capacity(n);
    let mut h_eigenvalues = Vec::with_capacity(n);
    for i in 1..=n {
        let e = apply_generator(&gens[generator_index(n, GeneratorLabel::E(i))], p)?;
        annihilated.push(e.is_zero());
        let h = apply_generator(&gens[generator_index(n, GeneratorLabel::H(i))], p)?;
        h_eigenvalues.push(
            h.ratio_to(p)
                .and_then(|c| c.is_integer().then(|| c.to_integer().to_i64()).flatten()),
        );
    }
    let mut report = HWVReport {
        rank: n,
        lambda: (lambda1, lambda2),
        index: None,
        annihilated,
        h_eigenvalues,
        passed: false,
    };
    let expected = report.expected_eigenvalues();
    report.passed = report.annihilated.iter().all(|&a| a)
        && report
            .h_eigenvalues
            .iter()
            .zip(&expected)
            .all(|(got, want)| *got == Some(*want));
    Ok(report)
}

/// Builds `b^(λ1,λ2,j)` and verifies it.
pub fn verify_candidate(n: usize, lambda1: u32, lambda2: u32, j: u32) -> Result<HWVReport> {
    let p = hwv_candidate(n, lambda1, lambda2, j)?;
    let mut report = verify_highest_weight(&p, lambda1, lambda2, n)?;
    report.index = Some(j);
    Ok(report)
}

/// Rank of the coefficient matrix (polynomials × monomials), by
/// fraction-free elimination after clearing denominators row by row.
pub fn linear_independence(ps: &[SymPolynomial]) -> (bool, usize) {
    let mut columns: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in ps {
        for (m, _) in p.terms() {
            let next = columns.len();
            columns.entry(m).or_insert(next);
        }
    }
    let rows: Vec<Vec<BigInt>> = ps
        .iter()
        .map(|p| {
            let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
            let mut row = alloc::vec![BigInt::zero(); columns.len()];
            for (m, c) in p.terms() {
                let scaled = c * BigRational::from_integer(lcm.clone());
                row[columns[m]] = scaled.to_integer();
            }
            row
        })
        .collect();
    let rank = bareiss_rank(rows);
    (rank == ps.len(), rank)
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn var(v: CoordinateVariable) -> SymPolynomial {
        SymPolynomial::var(v)
    }

    #[test]
    fn candidate_examples() {
        let n = 2;
        let (x, y, z, w) = (
            var(CoordinateVariable::x(n)),
            var(CoordinateVariable::y(n)),
            var(CoordinateVariable::z(n)),
            var(CoordinateVariable::w(n)),
        );
        assert_eq!(hwv_candidate(n, 1, 0, 0).unwrap(), w);
        let minor = &(&x * &w) - &(&y * &z);
        assert_eq!(hwv_candidate(n, 1, 1, 0).unwrap(), minor);
        let want = &(&(&x * &z) * &w) - &(&y * &z.pow(2));
        assert_eq!(hwv_candidate(n, 2, 1, 1).unwrap(), want);
        assert!(matches!(hwv_candidate(n, 1, 2, 0), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(hwv_candidate(n, 2, 1, 2), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn verify_examples() {
        let r = verify_candidate(2, 1, 0, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.h_eigenvalues, vec![Some(1), Some(0)]);
        let r = verify_candidate(2, 1, 1, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.h_eigenvalues, vec![Some(0), Some(1)]);
        let x = var(CoordinateVariable::x(2));
        let r = verify_highest_weight(&x, 1, 0, 2).unwrap();
        assert!(!r.passed);
        assert!(!r.annihilated[0]);
    }

    #[test]
    fn independence_examples() {
        let z = var(CoordinateVariable::z(2));
        let w = var(CoordinateVariable::w(2));
        assert_eq!(linear_independence(&[w.clone(), z]), (true, 2));
        let b0 = hwv_candidate(2, 2, 1, 0).unwrap();
        let b1 = hwv_candidate(2, 2, 1, 1).unwrap();
        assert_eq!(linear_independence(&[b0, b1]), (true, 2));
        let half = w.scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(
            linear_independence(&[half, w.scale(&BigRational::from_integer(2.into()))]),
            (false, 1)
        );
    }

    #[test]
    fn display_of_minor() {
        assert_eq!(hwv_candidate(2, 1, 1, 0).unwrap().to_string(), "u1_3*u4_4 - u1_4*u4_3");
    }
}
