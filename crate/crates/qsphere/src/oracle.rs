//! Independent reference computations the suites compare against. None of
//! them go through the formulas they check.

/// Number of King symplectic tableaux of shape `λ`, i.e. `dim V(λ)` for
/// `Sp(2n)` with `n = λ.len()`. Alphabet `1 < 1' < ... < n < n'`; tableaux
/// are semistandard and row `r` holds only letters `>= r`. Exponential, so
/// for small shapes only.
pub fn king_tableaux(lambda: &[u32]) -> u64 {
    let rows: Vec<usize> = lambda.iter().map(|&v| v as usize).filter(|&v| v > 0).collect();
    let n = lambda.len();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    fill(0, 0, &rows, n, &mut grid)
}

fn fill(r: usize, c: usize, rows: &[usize], n: usize, grid: &mut [Vec<usize>]) -> u64 {
    if r == rows.len() {
        return 1;
    }
    if c == rows[r] {
        return fill(r + 1, 0, rows, n, grid);
    }
    // letter r+1 unbarred sits at index 2r
    let mut lo = 2 * r;
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

/// `max_{t∈[0,1]} t^(p/2) (1-t)^(q/2)` with `0^0 = 1`.
fn beta_peak(p: u32, q: u32) -> f64 {
    if p + q == 0 {
        return 1.0;
    }
    let (p, q) = (f64::from(p), f64::from(q));
    let t = p / (p + q);
    let part = |base: f64, e: f64| if e == 0.0 { 1.0 } else { base.powf(e / 2.0) };
    part(t, p) * part(1.0 - t, q)
}

/// Sup over Θ of `z^a w^b (xw+yz)^c`. With `(x,y) ∝ (w,z)` optimal, the
/// angular factor `sin^a cos^b` and the radial factor
/// `ρ^(a+b+c) (1-ρ²)^(c/2)` are maximised separately.
pub fn surrogate_sup(a: u32, b: u32, c: u32) -> f64 {
    beta_peak(a, b) * beta_peak(a + b + c, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_symplectic_dimensions() {
        assert_eq!(king_tableaux(&[1, 0]), 4);
        assert_eq!(king_tableaux(&[1, 1]), 5);
        assert_eq!(king_tableaux(&[2, 0]), 10);
        assert_eq!(king_tableaux(&[1, 0, 0]), 6);
    }

    #[test]
    fn known_suprema() {
        assert_eq!(surrogate_sup(0, 0, 0), 1.0);
        assert!((surrogate_sup(0, 0, 1) - 0.5).abs() < 1e-15);
        assert!((surrogate_sup(1, 1, 1) - 3.0 * 3f64.sqrt() / 32.0).abs() < 1e-15);
    }
}
