//! Dense square matrices over arbitrary-precision integers.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense n-by-n matrix of exact integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds an n-by-n matrix from an entry function `f(row, col)`.
    /// Indices are 0-based. Panics if `n == 0`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(n >= 1, "matrix order must be >= 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntMatrix { n, entries }
    }

    /// Builds a matrix from explicit rows; rejects empty or ragged input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidParameter("matrix must have at least one row".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(IntMatrix { n, entries })
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.n + col]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Entrywise sum; orders must agree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(IntMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    /// Entrywise difference; orders must agree.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(IntMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        IntMatrix { n: self.n, entries: self.entries.iter().map(|e| e * s).collect() }
    }

    /// Exact matrix product; orders must agree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).map(|t| self.get(i, t) * other.get(t, j)).sum()
        }))
    }

    /// Row sums, i.e. the product `A * 1` with the all-ones vector.
    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).sum()).collect()
    }

    /// The product `v^T * A` for a row vector `v`.
    pub fn left_mul(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: v.len() });
        }
        Ok((0..self.n).map(|j| (0..self.n).map(|i| &v[i] * self.get(i, j)).sum()).collect())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        Ok(())
    }

    fn row_swap(entries: &mut [BigInt], n: usize, a: usize, b: usize) {
        for j in 0..n {
            entries.swap(a * n + j, b * n + j);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (row, col): (usize, usize)) -> &BigInt {
        self.get(row, col)
    }
}

impl fmt::Debug for IntMatrix {
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

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Zero pivots are repaired by row swaps with sign tracking; if no usable
/// pivot exists below, the determinant is zero. Every intermediate division
/// is exact, which the implementation asserts.
pub fn det_bareiss(a: &IntMatrix) -> BigInt {
    let n = a.order();
    let mut m = a.entries.clone();
    let mut negated = false;
    let mut prev = BigInt::one();
    for r in 0..n.saturating_sub(1) {
        if m[r * n + r].is_zero() {
            match (r + 1..n).find(|&i| !m[i * n + r].is_zero()) {
                Some(p) => {
                    IntMatrix::row_swap(&mut m, n, r, p);
                    negated = !negated;
                }
                None => return BigInt::zero(),
            }
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let num = &m[r * n + r] * &m[i * n + j] - &m[i * n + r] * &m[r * n + j];
                let (q, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss elimination produced an inexact division");
                m[i * n + j] = q;
            }
            m[i * n + r] = BigInt::zero();
        }
        prev = m[r * n + r].clone();
    }
    let det = m[n * n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}

/// Largest order accepted by [`det_cofactor`]; Laplace expansion is factorial.
pub const COFACTOR_MAX_ORDER: usize = 7;

/// Determinant by Laplace (cofactor) expansion along the first row.
///
/// An intentionally different algorithm used to cross-check [`det_bareiss`]
/// on small matrices. Orders above [`COFACTOR_MAX_ORDER`] are rejected.
pub fn det_cofactor(a: &IntMatrix) -> Result<BigInt> {
    if a.order() > COFACTOR_MAX_ORDER {
        return Err(Error::SizeLimit { limit: COFACTOR_MAX_ORDER, got: a.order() });
    }
    Ok(cofactor_expand(a))
}

fn cofactor_expand(a: &IntMatrix) -> BigInt {
    let n = a.order();
    if n == 1 {
        return a.get(0, 0).clone();
    }
    let mut det = BigInt::zero();
    for col in 0..n {
        if a.get(0, col).is_zero() {
            continue;
        }
        let minor = IntMatrix::from_fn(n - 1, |i, j| {
            a.get(i + 1, if j < col { j } else { j + 1 }).clone()
        });
        let term = a.get(0, col) * cofactor_expand(&minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// `a^m` by repeated squaring; `m = 0` gives the identity.
pub fn mat_pow(a: &IntMatrix, m: u32) -> IntMatrix {
    let mut result = IntMatrix::identity(a.order());
    let mut base = a.clone();
    let mut exp = m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result.mul(&base).expect("orders agree");
        }
        exp >>= 1;
        if exp > 0 {
            base = base.mul(&base).expect("orders agree");
        }
    }
    result
}

/// Rank over the rationals, via fraction-free integer elimination.
pub fn rank_exact(a: &IntMatrix) -> usize {
    let n = a.order();
    let mut m = a.entries.clone();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| !m[i * n + col].is_zero()) else {
            continue;
        };
        if p != row {
            IntMatrix::row_swap(&mut m, n, row, p);
        }
        let pivot = m[row * n + col].clone();
        for i in row + 1..n {
            if m[i * n + col].is_zero() {
                continue;
            }
            let factor = m[i * n + col].clone();
            for j in col..n {
                m[i * n + j] = &pivot * &m[i * n + j] - &factor * &m[row * n + j];
            }
        }
        rank += 1;
        row += 1;
        if row == n {
            break;
        }
    }
    rank
}

/// The outer product `1 * v^T`: every row of the result equals `v`.
pub fn outer(ones_dim: usize, v: &[BigInt]) -> Result<IntMatrix> {
    if ones_dim == 0 {
        return Err(Error::InvalidParameter("outer product needs dimension >= 1".into()));
    }
    if v.len() != ones_dim {
        return Err(Error::DimensionMismatch { expected: ones_dim, got: v.len() });
    }
    Ok(IntMatrix::from_fn(ones_dim, |_, j| v[j].clone()))
}
