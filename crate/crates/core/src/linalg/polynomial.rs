//! Polynomials over exact rationals and the characteristic-polynomial oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, RatMatrix, Rational};

/// Polynomial with exact rational coefficients; `coeffs[i]` multiplies `x^i`.
/// Trailing zero coefficients are trimmed, so the leading coefficient of a
/// nonzero polynomial is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Integer-coefficient constructor, ascending powers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }
}

/// Characteristic polynomial `det(A - x*I)` by the Faddeev-LeVerrier
/// recurrence over exact rationals.
///
/// The coefficients of an integer matrix are guaranteed integral; the final
/// result is checked and a surviving denominator reports `Inconsistency`.
/// Sign convention: the leading coefficient is `(-1)^n`, exactly as
/// `det(A - x*I)` expands, not the monic normalization.
pub fn char_poly(a: &IntMatrix) -> Result<Polynomial> {
    let n = a.order();
    let a_rat = RatMatrix::from_int(a);
    // Monic det(x*I - A) first: c[n] = 1, then
    //   M_m = A*M_{m-1} + c[n-m+1]*I,   c[n-m] = -tr(A*M_m)/m.
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut product = RatMatrix::zero(n); // A * M_0
    for m in 1..=n {
        let step = product.plus_diag(&coeffs[n - m + 1]);
        product = a_rat.mul(&step)?;
        let divisor = Rational::from_integer(BigInt::from(m));
        coeffs[n - m] = -(product.trace() / divisor);
    }
    for c in &coeffs {
        if !c.denom().is_one() {
            return Err(Error::Inconsistency(format!(
                "characteristic polynomial coefficient {c} is not an integer"
            )));
        }
    }
    // det(A - x*I) = (-1)^n det(x*I - A).
    if n % 2 == 1 {
        for c in &mut coeffs {
            *c = -c.clone();
        }
    }
    Ok(Polynomial::new(coeffs))
}
