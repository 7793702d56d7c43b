use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{CoordinateVariable, Monomial, SymPolynomial};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorLabel {
    E(usize),
    F(usize),
    H(usize),
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLabel::E(i) => write!(f, "E_{i}"),
            GeneratorLabel::F(i) => write!(f, "F_{i}"),
            GeneratorLabel::H(i) => write!(f, "H_{i}"),
        }
    }
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 1-based entry.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.data[(row - 1) * self.dim + (col - 1)]
    }

    fn set(&mut self, row: usize, col: usize, v: i64) {
        self.data[(row - 1) * self.dim + (col - 1)] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.dim);
        for r in 1..=self.dim {
            for c in 1..=self.dim {
                t.set(c, r, self.entry(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for r in 1..=self.dim {
            for c in 1..=self.dim {
                let s = (1..=self.dim).map(|k| self.entry(r, k) * other.entry(k, c)).sum();
                out.set(r, c, s);
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).combine(&other.mul(self), 1, -1)
    }

    fn combine(&self, other: &Self, a: i64, b: i64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(x, y)| a * x + b * y).collect(),
        }
    }

    fn scaled(&self, a: i64) -> Self {
        self.combine(self, a, 0)
    }

    pub fn is_diagonal(&self) -> bool {
        (1..=self.dim).all(|r| (1..=self.dim).all(|c| r == c || self.entry(r, c) == 0))
    }
}

/// A Chevalley generator and its matrix `t(f)` in the defining representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorAction {
    pub label: GeneratorLabel,
    pub rank: usize,
    pub matrix: IntMatrix,
}

/// Type C Cartan integers `⟨α_j, α_i^∨⟩` for simple roots
/// `α_i = ε_i - ε_(i+1)` (i < n) and `α_n = 2ε_n`.
pub fn cartan_entry(n: usize, i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) != 1 {
        0
    } else if i == n - 1 && j == n {
        -2
    } else {
        -1
    }
}

/// Basis of `C^(2n)`: `e_j` has weight `-ε_j` and `e_(2n+1-j)` has weight
/// `+ε_j`, so the last column of the coordinate matrix carries `+ε_1`.
fn plus(n: usize, j: usize) -> usize {
    2 * n + 1 - j
}

fn minus(j: usize) -> usize {
    j
}

/// `E_1..E_n, F_1..F_n, H_1..H_n` of `sp(2n)` in the defining representation.
///
/// Besides the Chevalley relations and invariance of the symplectic form,
/// the induced derivation action on `x, y, z, w` is checked against the
/// fixed table of values (`E_1(x) = -z`, `H_1(z) = z`, ...). Any mismatch is
/// a [`Error::Convention`]; unanchored matrices are never returned.
pub fn build_generator_matrices(n: usize) -> Result<Vec<GeneratorAction>> {
    if n < 2 {
        return Err(Error::UnsupportedRank(n));
    }
    let dim = 2 * n;
    let mut raising = Vec::with_capacity(n);
    for i in 1..n {
        let mut e = IntMatrix::zero(dim);
        e.set(plus(n, i), plus(n, i + 1), -1);
        e.set(minus(i + 1), minus(i), 1);
        raising.push(e);
    }
    let mut long = IntMatrix::zero(dim);
    long.set(plus(n, n), minus(n), 1);
    raising.push(long);

    let lowering: Vec<IntMatrix> = raising.iter().map(IntMatrix::transpose).collect();
    let cartan: Vec<IntMatrix> = raising.iter().zip(&lowering).map(|(e, f)| e.commutator(f)).collect();

    let mut out = Vec::with_capacity(3 * n);
    let tag = |label, matrix| GeneratorAction { label, rank: n, matrix };
    out.extend(
        raising
            .into_iter()
            .enumerate()
            .map(|(i, m)| tag(GeneratorLabel::E(i + 1), m)),
    );
    out.extend(
        lowering
            .into_iter()
            .enumerate()
            .map(|(i, m)| tag(GeneratorLabel::F(i + 1), m)),
    );
    out.extend(
        cartan
            .into_iter()
            .enumerate()
            .map(|(i, m)| tag(GeneratorLabel::H(i + 1), m)),
    );

    check_chevalley(n, &out)?;
    check_symplectic(n, &out)?;
    check_anchors(n, &out)?;
    Ok(out)
}

/// Index of `label` in the list returned by [`build_generator_matrices`].
pub fn generator_index(n: usize, label: GeneratorLabel) -> usize {
    match label {
        GeneratorLabel::E(i) => i - 1,
        GeneratorLabel::F(i) => n + i - 1,
        GeneratorLabel::H(i) => 2 * n + i - 1,
    }
}

/// `[H_i,E_j] = A E_j`, `[H_i,F_j] = -A F_j`, `[E_i,F_j] = δ_ij H_i`,
/// `[H_i,H_j] = 0`, with `A = ⟨α_j, α_i^∨⟩`.
pub fn check_chevalley(n: usize, gens: &[GeneratorAction]) -> Result<()> {
    let m = |l| &gens[generator_index(n, l)].matrix;
    let zero = IntMatrix::zero(2 * n);
    use GeneratorLabel::*;
    for i in 1..=n {
        if !m(H(i)).is_diagonal() {
            return Err(Error::Convention(format!("H_{i} is not diagonal")));
        }
        for j in 1..=n {
            let a = cartan_entry(n, i, j);
            let checks = [
                (m(H(i)).commutator(m(E(j))), m(E(j)).scaled(a), "[H,E]"),
                (m(H(i)).commutator(m(F(j))), m(F(j)).scaled(-a), "[H,F]"),
                (
                    m(E(i)).commutator(m(F(j))),
                    if i == j { m(H(i)).clone() } else { zero.clone() },
                    "[E,F]",
                ),
                (m(H(i)).commutator(m(H(j))), zero.clone(), "[H,H]"),
            ];
            for (got, want, what) in checks {
                if got != want {
                    return Err(Error::Convention(format!("{what} relation fails for i={i}, j={j}")));
                }
            }
        }
    }
    Ok(())
}

/// `t^T J + J t = 0` for the form pairing `e_(+j)` with `e_(-j)`.
fn check_symplectic(n: usize, gens: &[GeneratorAction]) -> Result<()> {
    let mut j = IntMatrix::zero(2 * n);
    for k in 1..=n {
        j.set(plus(n, k), minus(k), 1);
        j.set(minus(k), plus(n, k), -1);
    }
    for g in gens {
        let t = &g.matrix;
        if t.transpose().mul(&j).combine(&j.mul(t), 1, 1) != IntMatrix::zero(2 * n) {
            return Err(Error::Convention(format!(
                "{} does not preserve the symplectic form",
                g.label
            )));
        }
    }
    Ok(())
}

/// The fixed action table on `x, y, z, w`. Entries are `(generator, letter,
/// coefficient, image letter)`, with `None` meaning the image is zero.
fn anchor_table(n: usize) -> Vec<(GeneratorLabel, char, i64, Option<char>)> {
    use GeneratorLabel::*;
    let mut t = vec![
        (E(1), 'x', -1, Some('z')),
        (E(1), 'y', -1, Some('w')),
        (H(1), 'x', -1, Some('x')),
        (H(1), 'y', -1, Some('y')),
        (H(1), 'z', 1, Some('z')),
        (H(1), 'w', 1, Some('w')),
        (H(2), 'x', 1, Some('x')),
        (H(2), 'y', 1, Some('y')),
        (H(2), 'z', 0, None),
        (H(2), 'w', 0, None),
    ];
    for i in 2..=n {
        for v in ['x', 'y', 'z', 'w'] {
            t.push((E(i), v, 0, None));
        }
    }
    for i in 3..=n {
        for v in ['x', 'y', 'z', 'w'] {
            t.push((H(i), v, 0, None));
        }
    }
    t
}

fn letter(n: usize, c: char) -> CoordinateVariable {
    match c {
        'x' => CoordinateVariable::x(n),
        'y' => CoordinateVariable::y(n),
        'z' => CoordinateVariable::z(n),
        _ => CoordinateVariable::w(n),
    }
}

fn check_anchors(n: usize, gens: &[GeneratorAction]) -> Result<()> {
    for (label, v, coeff, image) in anchor_table(n) {
        let g = &gens[generator_index(n, label)];
        let got = apply_generator(g, &SymPolynomial::var(letter(n, v)))?;
        let want = match image {
            Some(u) => SymPolynomial::var(letter(n, u)).scale(&BigRational::from_integer(coeff.into())),
            None => SymPolynomial::zero(),
        };
        if got != want {
            return Err(Error::Convention(format!("{label}({v}) = {got}, expected {want}")));
        }
    }
    Ok(())
}

/// Image of one variable: `f(u^k_l) = Σ_m u^k_m t_ml(f)`.
fn act_on_variable(g: &GeneratorAction, v: CoordinateVariable) -> Vec<(CoordinateVariable, i64)> {
    let l = v.col() as usize;
    (1..=g.matrix.dim())
        .filter_map(|m| {
            let t = g.matrix.entry(m, l);
            (t != 0).then(|| (v.with_col(m as u32), t))
        })
        .collect()
}

/// Extends the action on variables to polynomials by the Leibniz rule.
pub fn apply_generator(g: &GeneratorAction, p: &SymPolynomial) -> Result<SymPolynomial> {
    for v in p.variables() {
        v.check_rank(g.rank)?;
    }
    let mut out = SymPolynomial::zero();
    for (mono, c) in p.terms() {
        let vars = mono.vars();
        for (pos, &v) in vars.iter().enumerate() {
            // equal neighbours give the same term; count them once with weight
            if pos > 0 && vars[pos - 1] == v {
                continue;
            }
            let mult = vars[pos..].iter().take_while(|&&u| u == v).count() as i64;
            let mut rest = Vec::with_capacity(vars.len());
            rest.extend_from_slice(&vars[..pos]);
            rest.extend_from_slice(&vars[pos + 1..]);
            for (image, t) in act_on_variable(g, v) {
                let mut vs = rest.clone();
                vs.push(image);
                let coeff = c * BigRational::from_integer((mult * t).into());
                if !coeff.is_zero() {
                    out.add_term(Monomial::from_vars(vs), coeff);
                }
            }
        }
    }
    Ok(out)
}
