use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// The coordinate function `u^row_col` on `Sp(2n)`; only rows `1` and `2n`
/// generate the sphere's algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordinateVariable {
    row: u32,
    col: u32,
}

impl CoordinateVariable {
    pub fn new(row: u32, col: u32, n: usize) -> Result<Self> {
        let v = Self { row, col };
        v.check_rank(n)?;
        Ok(v)
    }

    /// `x = u^1_(2n-1)`
    pub fn x(n: usize) -> Self {
        Self::letter(1, 1, n)
    }

    /// `y = u^(2n)_(2n-1)`
    pub fn y(n: usize) -> Self {
        Self::letter(2 * n as u32, 1, n)
    }

    /// `z = u^1_(2n)`
    pub fn z(n: usize) -> Self {
        Self::letter(1, 0, n)
    }

    /// `w = u^(2n)_(2n)`
    pub fn w(n: usize) -> Self {
        Self::letter(2 * n as u32, 0, n)
    }

    fn letter(row: u32, back: u32, n: usize) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        Self {
            row,
            col: 2 * n as u32 - back,
        }
    }

    pub fn row(self) -> u32 {
        self.row
    }

    pub fn col(self) -> u32 {
        self.col
    }

    pub(crate) fn check_rank(self, n: usize) -> Result<()> {
        let top = 2 * n as u32;
        if n >= 2 && (self.row == 1 || self.row == top) && (1..=top).contains(&self.col) {
            Ok(())
        } else {
            Err(Error::ForeignVariable {
                row: self.row,
                col: self.col,
                rank: n,
            })
        }
    }

    pub(crate) fn with_col(self, col: u32) -> Self {
        Self { row: self.row, col }
    }
}

impl fmt::Display for CoordinateVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}_{}", self.row, self.col)
    }
}

/// Commutative monomial, stored as its sorted multiset of variables.
/// Ordered by degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<CoordinateVariable>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn from_vars(mut vars: Vec<CoordinateVariable>) -> Self {
        vars.sort_unstable();
        Self(vars)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[CoordinateVariable] {
        &self.0
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.0.len() + other.0.len());
        vars.extend_from_slice(&self.0);
        vars.extend_from_slice(&other.0);
        Self::from_vars(vars)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with exact rational coefficients in commuting coordinate
/// variables. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl SymPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: CoordinateVariable) -> Self {
        Self::term(BigRational::one(), Monomial::from_vars(alloc::vec![v]))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn variables(&self) -> impl Iterator<Item = CoordinateVariable> + '_ {
        self.terms.keys().flat_map(|m| m.0.iter().copied())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `self = c · other` for some rational `c`; `None` when not proportional
    /// or when `other` is zero and `self` is not.
    pub fn ratio_to(&self, other: &SymPolynomial) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let (m, a) = other.terms.iter().next()?;
        let c = self.coefficient(m) / a;
        (other.scale(&c) == *self).then_some(c)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl From<CoordinateVariable> for SymPolynomial {
    fn from(v: CoordinateVariable) -> Self {
        Self::var(v)
    }
}

impl From<i64> for SymPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }
}

impl Add for &SymPolynomial {
    type Output = SymPolynomial;
    fn add(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPolynomial {
    type Output = SymPolynomial;
    fn sub(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &SymPolynomial {
    type Output = SymPolynomial;
    fn mul(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = SymPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &SymPolynomial {
    type Output = SymPolynomial;
    fn neg(self) -> SymPolynomial {
        SymPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! by_value {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for SymPolynomial {
            type Output = SymPolynomial;
            fn $f(self, rhs: SymPolynomial) -> SymPolynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
by_value!(Add add, Sub sub, Mul mul);

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = *c < BigRational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = abs.is_one();
            if !unit || m.degree() == 0 {
                write!(f, "{abs}")?;
            }
            for (j, v) in m.0.iter().enumerate() {
                if j > 0 || !unit {
                    f.write_str("*")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn letters() {
        assert_eq!(CoordinateVariable::x(2), CoordinateVariable::new(1, 3, 2).unwrap());
        assert_eq!(CoordinateVariable::w(3).row(), 6);
        assert_eq!(CoordinateVariable::z(3).col(), 6);
        assert!(CoordinateVariable::new(2, 1, 2).is_err());
        assert!(CoordinateVariable::new(1, 5, 2).is_err());
    }

    #[test]
    fn arithmetic_cancels() {
        let x = SymPolynomial::var(CoordinateVariable::x(2));
        let y = SymPolynomial::var(CoordinateVariable::y(2));
        let s = &x + &y;
        let d = &x - &y;
        let prod = &s * &d;
        assert_eq!(prod, &x.pow(2) - &y.pow(2));
        assert!((&prod - &prod).is_zero());
        assert_eq!(prod.len(), 2);
    }

    #[test]
    fn degree_then_lex() {
        let x = Monomial::from_vars(alloc::vec![CoordinateVariable::x(2)]);
        let zz = Monomial::from_vars(alloc::vec![CoordinateVariable::z(2); 2]);
        let w = Monomial::from_vars(alloc::vec![CoordinateVariable::w(2)]);
        assert!(Monomial::one() < x && x < w && w < zz);
    }

    #[test]
    fn ratio() {
        let x = SymPolynomial::var(CoordinateVariable::x(2));
        let two = BigRational::from_integer(2.into());
        assert_eq!(x.scale(&two).ratio_to(&x), Some(two));
        let y = SymPolynomial::var(CoordinateVariable::y(2));
        assert_eq!((&x + &y).ratio_to(&x), None);
    }

    #[test]
    fn display() {
        let x = SymPolynomial::var(CoordinateVariable::x(2));
        let w = SymPolynomial::var(CoordinateVariable::w(2));
        let p = &(&x * &w) - &SymPolynomial::from(3);
        assert_eq!(p.to_string(), "-3 + u1_3*u4_4");
    }
}
