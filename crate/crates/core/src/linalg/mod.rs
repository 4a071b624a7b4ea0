//! Brute-force exact linear algebra over big integers and rationals.
//!
//! Everything here is an independent oracle: fraction-free determinants,
//! Gauss-Jordan inverses, Faddeev-LeVerrier characteristic polynomials.
//! The closed forms in [`crate::bataille`] are checked against these paths,
//! so this module must not share any shortcut with them.

mod matrix;
mod polynomial;
mod rational;

pub use matrix::{det_bareiss, det_cofactor, mat_pow, outer, rank_exact, IntMatrix};
pub use polynomial::{char_poly, Polynomial};
pub use rational::{rat_inverse, rational_string, RatMatrix, Rational};
