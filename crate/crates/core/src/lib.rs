//! Exact arithmetic for the matrix family `A(k,n)` whose entries are products
//! of k-Fibonacci and k-Lucas numbers.
//!
//! The crate has four layers:
//!
//! - [`sequence`]: the k-Fibonacci / k-Lucas kernel, signed indices included,
//!   and the product identities every closed form rests on;
//! - [`linalg`]: brute-force oracles over exact integers and rationals
//!   (Bareiss determinants, Gauss-Jordan inverses, Faddeev-LeVerrier
//!   characteristic polynomials, exact powers and ranks);
//! - [`bataille`]: the matrix family itself with closed forms for the
//!   determinant, trace, spectrum, inverse and powers, plus a grid
//!   verification harness proving closed form == oracle;
//! - [`catalog`] / [`oeis`]: the derived integer sequences, bundled golden
//!   fixtures and an optional OEIS b-file client with an on-disk cache.
//!
//! Everything is exact: `BigInt` scalars, reduced `BigRational` entries, and
//! internal divisions that are asserted rather than rounded.

pub mod bataille;
pub mod catalog;
pub mod error;
pub mod linalg;
pub mod oeis;
pub mod sequence;

pub use error::{Error, Result};
