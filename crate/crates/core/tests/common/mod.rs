//! Test-only oracles. Nothing here calls into the crate's formulas.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

/// Counts King symplectic tableaux of shape `λ` over `1 < 1' < 2 < 2' < ...
/// < n < n'`: semistandard, with every entry of row `r` at least `r`.
pub fn king_tableaux(lambda: &[u32]) -> u64 {
    let rows: Vec<usize> = lambda.iter().map(|&v| v as usize).filter(|&v| v > 0).collect();
    let n = lambda.len();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    fn fill(r: usize, c: usize, rows: &[usize], n: usize, grid: &mut Vec<Vec<usize>>) -> u64 {
        if r == rows.len() {
            return 1;
        }
        if c == rows[r] {
            return fill(r + 1, 0, rows, n, grid);
        }
        let mut lo = 2 * r; // letter r+1 (unbarred) has index 2r
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let mut total = 0;
        for v in lo..2 * n {
            grid[r][c] = v;
            total += fill(r, c + 1, rows, n, grid);
        }
        total
    }
    fill(0, 0, &rows, n, &mut grid)
}

/// Weyl dimension as `Π_{α>0} <λ+ρ, α^∨> / <ρ, α^∨>` over an explicit list of
/// positive coroots `ε_i ± ε_j` (i < j) and `ε_i`, in exact rationals.
pub fn weyl_by_roots(lambda: &[u32]) -> BigUint {
    let n = lambda.len();
    let rho: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
    let shifted: Vec<i64> = (0..n).map(|i| lambda[i] as i64 + rho[i]).collect();
    let mut coroots: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = vec![0; n];
            minus[i] = 1;
            minus[j] = -1;
            coroots.push(minus);
            let mut plus = vec![0; n];
            plus[i] = 1;
            plus[j] = 1;
            coroots.push(plus);
        }
        let mut long = vec![0; n];
        long[i] = 1;
        coroots.push(long);
    }
    let pair = |v: &[i64], c: &[i64]| v.iter().zip(c).map(|(a, b)| a * b).sum::<i64>();
    let mut acc = BigRational::one();
    for c in &coroots {
        acc *= BigRational::new(BigInt::from(pair(&shifted, c)), BigInt::from(pair(&rho, c)));
    }
    assert!(acc.is_integer());
    acc.to_integer().to_biguint().expect("positive dimension")
}

/// `M(k)` recomputed from scratch: each `γ` with `γ1 = k` contributes the
/// dimension of `(γ1, γ2, 0, ..)`.
pub fn level_multiplicity_oracle(n: usize, k: u32) -> BigUint {
    let mut total = BigUint::default();
    for g2 in 0..=k {
        for _g3 in 0..=(k - g2) {
            let mut lambda = vec![0; n];
            lambda[0] = k;
            lambda[1] = g2;
            total += weyl_by_roots(&lambda);
        }
    }
    total
}

/// Smallest `p` whose `(p+1)`-th forward difference vanishes, by repeated
/// differencing in signed big integers.
pub fn degree_by_differences(values: &[BigUint]) -> Option<usize> {
    let mut row: Vec<BigInt> = values.iter().map(|v| BigInt::from(v.clone())).collect();
    for p in 0..values.len() {
        let next: Vec<BigInt> = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        if next.len() >= 2 && next.iter().all(|v| v == &BigInt::default()) {
            return Some(p);
        }
        row = next;
    }
    None
}

pub fn to_u64(v: &BigUint) -> u64 {
    v.to_u64().unwrap()
}
