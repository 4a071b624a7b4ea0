//! Exact rational matrices and the Gauss-Jordan inverse oracle.

use std::fmt;
use std::ops::Index;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Reduced fraction of two big integers, denominator always positive.
/// Construction via `Rational::new` normalizes both invariants.
pub type Rational = num_rational::BigRational;

/// Dense n-by-n matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(n >= 1, "matrix order must be >= 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RatMatrix { n, entries }
    }

    pub fn from_int(a: &IntMatrix) -> Self {
        Self::from_fn(a.order(), |i, j| Rational::from_integer(a.get(i, j).clone()))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| Rational::zero())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.n + col]
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).map(|t| self.get(i, t) * other.get(t, j)).sum()
        }))
    }

    /// `self + s * I`.
    pub fn plus_diag(&self, s: &Rational) -> Self {
        Self::from_fn(self.n, |i, j| {
            if i == j {
                self.get(i, j) + s
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (row, col): (usize, usize)) -> &Rational {
        self.get(row, col)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact inverse over the rationals by Gauss-Jordan elimination on `[A | I]`.
///
/// Returns `Singular` when no inverse exists. The result satisfies
/// `a * inverse = inverse * a = I` exactly.
pub fn rat_inverse(a: &IntMatrix) -> Result<RatMatrix> {
    let n = a.order();
    // Augmented n x 2n system, row-major.
    let width = 2 * n;
    let mut aug: Vec<Rational> = Vec::with_capacity(n * width);
    for i in 0..n {
        for j in 0..n {
            aug.push(Rational::from_integer(a.get(i, j).clone()));
        }
        for j in 0..n {
            aug.push(if i == j { Rational::one() } else { Rational::zero() });
        }
    }
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !aug[r * width + col].is_zero()).ok_or(Error::Singular)?;
        if pivot_row != col {
            for j in 0..width {
                aug.swap(col * width + j, pivot_row * width + j);
            }
        }
        let pivot = aug[col * width + col].clone();
        for j in col..width {
            let scaled = &aug[col * width + j] / &pivot;
            aug[col * width + j] = scaled;
        }
        for r in 0..n {
            if r == col || aug[r * width + col].is_zero() {
                continue;
            }
            let factor = aug[r * width + col].clone();
            for j in col..width {
                let updated = &aug[r * width + j] - &factor * &aug[col * width + j];
                aug[r * width + j] = updated;
            }
        }
    }
    Ok(RatMatrix::from_fn(n, |i, j| aug[i * width + n + j].clone()))
}

/// Renders a rational as `num/den`, reduced, denominator positive.
/// Integers keep an explicit `/1` so the format stays uniform.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
