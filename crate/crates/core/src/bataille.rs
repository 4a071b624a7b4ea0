//! The Bataille matrix family and its closed-form invariants.
//!
//! `A(k,n)` is the n-by-n matrix with diagonal entries `F(k,2i-1)*L(k,2i)`
//! and column-constant off-diagonal entries `F(k,2j)*L(k,2j-1)` (the `k = 1`
//! case is Fibonacci Quarterly problem B1360). Everything interesting about
//! it follows from the rank-one decomposition `A = 2I + 1*v^T`: determinant,
//! trace, the two-point spectrum, inverse (Sherman-Morrison) and powers all
//! have closed forms, each of which this module evaluates exactly.
//!
//! [`verify_grid`] replays every closed form against the brute-force oracles
//! in [`crate::linalg`] over a parameter grid and reports per-check outcomes.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    char_poly, det_bareiss, mat_pow, outer, rank_exact, rat_inverse, IntMatrix, Polynomial,
    RatMatrix, Rational,
};
use crate::sequence::{self, exact_div};

/// Validated `(k, n)` pair: recurrence multiplier and matrix order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    k: i64,
    n: usize,
}

impl FamilyParams {
    pub fn new(k: i64, n: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameter(format!("k must be >= 1, got {k}")));
        }
        if n < 1 {
            return Err(Error::InvalidParameter("matrix order n must be >= 1".into()));
        }
        Ok(FamilyParams { k, n })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// The decomposition `A = d*I + 1*v^T` with `d = 2` and
/// `v_j = F(k,2j) * L(k,2j-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneForm {
    shift: BigInt,
    v: Vec<BigInt>,
}

impl RankOneForm {
    /// The diagonal shift `d` (always 2 for this family).
    pub fn shift(&self) -> &BigInt {
        &self.shift
    }

    pub fn v(&self) -> &[BigInt] {
        &self.v
    }

    /// `v^T * 1`, the sum of the rank-one weights.
    pub fn weight(&self) -> BigInt {
        self.v.iter().sum()
    }

    /// Rebuilds `d*I + 1*v^T` entrywise.
    pub fn reconstruct(&self) -> IntMatrix {
        let n = self.v.len();
        IntMatrix::from_fn(n, |i, j| {
            if i == j {
                &self.shift + &self.v[j]
            } else {
                self.v[j].clone()
            }
        })
    }
}

/// The full exact spectrum: eigenvalue 2 with multiplicity `n - 1` and the
/// simple dominant eigenvalue `lambda2 = 2 + v^T*1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub lambda1: BigInt,
    pub mult1: usize,
    pub lambda2: BigInt,
    pub mult2: usize,
    pub spectral_radius: BigInt,
    pub energy: BigInt,
}

/// Builds `A(k,n)` entry by entry from the sequence products.
pub fn build_matrix(p: &FamilyParams) -> IntMatrix {
    let k = p.k;
    IntMatrix::from_fn(p.n, |i, j| {
        // 1-based index in the usual statement of the family.
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        if i == j {
            sequence::fib(k, 2 * i - 1) * sequence::lucas(k, 2 * i)
        } else {
            sequence::fib(k, 2 * j) * sequence::lucas(k, 2 * j - 1)
        }
    })
}

/// The rank-one-plus-diagonal form of `A(k,n)`.
pub fn decompose(p: &FamilyParams) -> RankOneForm {
    let v = (1..=p.n as i64)
        .map(|j| sequence::fib(p.k, 2 * j) * sequence::lucas(p.k, 2 * j - 1))
        .collect();
    RankOneForm { shift: BigInt::from(2), v }
}

// (F(k,4n+3) - F(k,4n-1) + F(k,5) - 1) / (L(k,4) - 2), the quotient shared by
// the determinant, trace and eigenvalue formulas. The division is exact; a
// remainder is a transcription bug and surfaces as an Inconsistency error.
fn sum_quotient(k: i64, n: usize) -> Result<BigInt> {
    let n = n as i64;
    let numer =
        sequence::fib(k, 4 * n + 3) - sequence::fib(k, 4 * n - 1) + sequence::fib(k, 5) - 1;
    let denom = sequence::lucas(k, 4) - 2;
    exact_div(&numer, &denom)
}

/// Closed-form determinant `2^n * (1 + (q - 1 - n)/2)` where `q` is the
/// shared sum quotient; equals `det_bareiss(build_matrix(p))` exactly.
pub fn closed_det(p: &FamilyParams) -> Result<BigInt> {
    let q = sum_quotient(p.k, p.n)?;
    let weight = q - 1 - BigInt::from(p.n as i64);
    // 2^n + 2^(n-1) * weight, the integral expansion of 2^n (1 + weight/2).
    Ok((BigInt::one() << p.n) + ((BigInt::one() << (p.n - 1)) * weight))
}

/// The `k = 1` determinant formula `2^(n-1) * (L(4n+1) + 9 - 5n) / 5`.
pub fn closed_det_k1(n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidParameter("matrix order n must be >= 1".into()));
    }
    let inner = sequence::lucas(1, 4 * n as i64 + 1) + 9 - 5 * BigInt::from(n as i64);
    let fifth = exact_div(&inner, &BigInt::from(5))?;
    Ok((BigInt::one() << (n - 1)) * fifth)
}

/// Closed-form trace `q + n - 1`; equals the literal diagonal sum.
pub fn closed_trace(p: &FamilyParams) -> Result<BigInt> {
    let q = sum_quotient(p.k, p.n)?;
    Ok(q + BigInt::from(p.n as i64) - 1)
}

/// The `k = 1` trace formula `(F(4n+3) - F(4n-1) + 4)/5 + n - 1`.
pub fn closed_trace_k1(n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidParameter("matrix order n must be >= 1".into()));
    }
    let n = n as i64;
    let numer = sequence::fib(1, 4 * n + 3) - sequence::fib(1, 4 * n - 1) + 4;
    let fifth = exact_div(&numer, &BigInt::from(5))?;
    Ok(fifth + n - 1)
}

/// The simple eigenvalue `lambda2 = q - n + 1`, equivalently `2 + v^T*1`.
pub fn lambda2(p: &FamilyParams) -> Result<BigInt> {
    let q = sum_quotient(p.k, p.n)?;
    Ok(q - BigInt::from(p.n as i64) + 1)
}

/// The `k = 1` eigenvalue formula `(F(4n+3) - F(4n-1) - 5n + 9)/5`.
pub fn lambda2_k1(n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidParameter("matrix order n must be >= 1".into()));
    }
    let n = n as i64;
    let numer = sequence::fib(1, 4 * n + 3) - sequence::fib(1, 4 * n - 1) - 5 * BigInt::from(n) + 9;
    exact_div(&numer, &BigInt::from(5))
}

/// Both eigenvalues with multiplicities, the spectral radius and the graph
/// energy. For `n = 1` the sole eigenvalue is `lambda2`, so the radius is
/// still `lambda2` (an extension of the usual `n >= 2` statement).
pub fn spectrum(p: &FamilyParams) -> Result<SpectrumReport> {
    let lambda1 = BigInt::from(2);
    let l2 = lambda2(p)?;
    let mult1 = p.n - 1;
    let spectral_radius = lambda1.abs().max(l2.abs());
    let energy = BigInt::from(mult1 as i64) * lambda1.abs() + l2.abs();
    Ok(SpectrumReport { lambda1, mult1, lambda2: l2, mult2: 1, spectral_radius, energy })
}

/// Characteristic polynomial `(2 - x)^(n-1) * (lambda2 - x)` expanded into
/// coefficient form; equal to the Faddeev-LeVerrier oracle on `build_matrix`.
pub fn closed_charpoly(p: &FamilyParams) -> Result<Polynomial> {
    let l2 = lambda2(p)?;
    let mut poly = Polynomial::new(vec![
        Rational::from_integer(l2),
        -Rational::one(),
    ]);
    let linear = Polynomial::from_ints(&[2, -1]);
    for _ in 1..p.n {
        poly = poly.mul(&linear);
    }
    Ok(poly)
}

/// Sherman-Morrison inverse `(1/2) I - (1/(2*lambda2)) 1*v^T`, entrywise
/// `delta_ij/2 - v_j/(2*lambda2)`; the product with `A(k,n)` is exactly `I`.
pub fn closed_inverse(p: &FamilyParams) -> Result<RatMatrix> {
    let l2 = lambda2(p)?;
    let v = decompose(p).v;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let denom = BigInt::from(2) * l2;
    Ok(RatMatrix::from_fn(p.n, |i, j| {
        let off = Rational::new(-v[j].clone(), denom.clone());
        if i == j {
            &half + off
        } else {
            off
        }
    }))
}

/// Closed-form power
/// `A^m = 2^m I + ((lambda2^m - 2^m) / (lambda2 - 2)) * 1*v^T`.
///
/// The divisor `lambda2 - 2 = v^T*1` is at least 1 and the division is exact;
/// `m = 0` makes the numerator vanish, so the identity falls out directly.
pub fn closed_power(p: &FamilyParams, m: u32) -> Result<IntMatrix> {
    let l2 = lambda2(p)?;
    let weight = &l2 - 2;
    let numer = l2.pow(m) - BigInt::from(2).pow(m);
    let coeff = exact_div(&numer, &weight)?;
    let v = decompose(p).v;
    let rank_one = outer(p.n, &v).expect("v has length n");
    let two_m = BigInt::from(2).pow(m);
    IntMatrix::identity(p.n).scale(&two_m).add(&rank_one.scale(&coeff))
}

/// Outcome of one closed-form-versus-oracle comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One `(k, n, check)` verification record. `witness` carries the first
/// counterexample when the check failed.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub k: i64,
    pub n: usize,
    pub check: &'static str,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// All records from a [`verify_grid`] run, sorted by `(k, n, check)`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn passed_count(&self) -> usize {
        self.records.iter().filter(|r| r.passed()).count()
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.records.iter().find(|r| !r.passed())
    }
}

/// Replays every closed form against its oracle over the inclusive grid.
/// Failures (including internal consistency errors) are recorded, never
/// raised; empty ranges produce an empty report.
pub fn verify_grid(
    k_range: RangeInclusive<i64>,
    n_range: RangeInclusive<usize>,
    power_max: u32,
) -> VerificationReport {
    let mut records = Vec::new();
    for k in k_range {
        for n in n_range.clone() {
            let Ok(p) = FamilyParams::new(k, n) else {
                continue;
            };
            records.extend(verify_cell(&p, power_max));
        }
    }
    records.sort_by(|a, b| (a.k, a.n, a.check).cmp(&(b.k, b.n, b.check)));
    VerificationReport { records }
}

fn verify_cell(p: &FamilyParams, power_max: u32) -> Vec<CheckRecord> {
    let matrix = build_matrix(p);
    let form = decompose(p);
    let mut records = Vec::with_capacity(9);
    let mut push = |check: &'static str, outcome: std::result::Result<(), String>| {
        let (status, witness) = match outcome {
            Ok(()) => (CheckStatus::Pass, None),
            Err(w) => (CheckStatus::Fail, Some(w)),
        };
        records.push(CheckRecord { k: p.k, n: p.n, check, status, witness });
    };

    push("charpoly", check_charpoly(p, &matrix));
    push("det", check_det(p, &matrix));
    push("energy", check_energy(p));
    push("inverse", check_inverse(p, &matrix));
    push("left-eigenvector", check_left_eigenvector(p, &matrix, &form));
    push("power", check_power(p, &matrix, power_max));
    push("rank", check_rank(p, &matrix));
    push("right-eigenvector", check_right_eigenvector(p, &matrix));
    push("trace", check_trace(p, &matrix));
    records
}

fn check_det(p: &FamilyParams, matrix: &IntMatrix) -> std::result::Result<(), String> {
    let closed = closed_det(p).map_err(|e| e.to_string())?;
    let oracle = det_bareiss(matrix);
    if closed == oracle {
        Ok(())
    } else {
        Err(format!("closed determinant {closed} != oracle {oracle}"))
    }
}

fn check_trace(p: &FamilyParams, matrix: &IntMatrix) -> std::result::Result<(), String> {
    let closed = closed_trace(p).map_err(|e| e.to_string())?;
    let oracle = matrix.trace();
    if closed == oracle {
        Ok(())
    } else {
        Err(format!("closed trace {closed} != diagonal sum {oracle}"))
    }
}

fn check_charpoly(p: &FamilyParams, matrix: &IntMatrix) -> std::result::Result<(), String> {
    let closed = closed_charpoly(p).map_err(|e| e.to_string())?;
    let oracle = char_poly(matrix).map_err(|e| e.to_string())?;
    if closed == oracle {
        Ok(())
    } else {
        Err(format!("closed charpoly {:?} != oracle {:?}", closed.coeffs(), oracle.coeffs()))
    }
}

fn check_inverse(p: &FamilyParams, matrix: &IntMatrix) -> std::result::Result<(), String> {
    let closed = closed_inverse(p).map_err(|e| e.to_string())?;
    let oracle = rat_inverse(matrix).map_err(|e| e.to_string())?;
    if closed != oracle {
        return Err("closed inverse differs from Gauss-Jordan oracle".into());
    }
    let product = closed.mul(&RatMatrix::from_int(matrix)).map_err(|e| e.to_string())?;
    if !product.is_identity() {
        return Err("closed inverse times A is not the identity".into());
    }
    Ok(())
}

fn check_power(
    p: &FamilyParams,
    matrix: &IntMatrix,
    power_max: u32,
) -> std::result::Result<(), String> {
    for m in 0..=power_max {
        let closed = closed_power(p, m).map_err(|e| e.to_string())?;
        let oracle = mat_pow(matrix, m);
        if closed != oracle {
            return Err(format!("closed power disagrees with iterated product at m={m}"));
        }
    }
    Ok(())
}

fn check_rank(p: &FamilyParams, matrix: &IntMatrix) -> std::result::Result<(), String> {
    // A - 2I = 1*v^T with v_1 = k^2 > 0, so the rank is 1 for every n >= 1;
    // that pins the eigenvalue 2 to geometric multiplicity n - 1.
    let shifted = matrix.sub(&IntMatrix::identity(p.n).scale(&BigInt::from(2)))
        .map_err(|e| e.to_string())?;
    let rank = rank_exact(&shifted);
    if rank == 1 {
        Ok(())
    } else {
        Err(format!("rank(A - 2I) = {rank}, expected 1"))
    }
}

fn check_right_eigenvector(
    p: &FamilyParams,
    matrix: &IntMatrix,
) -> std::result::Result<(), String> {
    let l2 = lambda2(p).map_err(|e| e.to_string())?;
    for (i, sum) in matrix.row_sums().into_iter().enumerate() {
        if sum != l2 {
            return Err(format!("(A*1)[{i}] = {sum} != lambda2 = {l2}"));
        }
    }
    Ok(())
}

fn check_left_eigenvector(
    p: &FamilyParams,
    matrix: &IntMatrix,
    form: &RankOneForm,
) -> std::result::Result<(), String> {
    let l2 = lambda2(p).map_err(|e| e.to_string())?;
    let product = matrix.left_mul(form.v()).map_err(|e| e.to_string())?;
    for (j, value) in product.into_iter().enumerate() {
        let expected = &l2 * &form.v()[j];
        if value != expected {
            return Err(format!("(v^T*A)[{j}] = {value} != lambda2*v[{j}] = {expected}"));
        }
    }
    Ok(())
}

fn check_energy(p: &FamilyParams) -> std::result::Result<(), String> {
    let energy = spectrum(p).map_err(|e| e.to_string())?.energy;
    let trace = closed_trace(p).map_err(|e| e.to_string())?;
    if energy == trace {
        Ok(())
    } else {
        Err(format!("energy {energy} != trace {trace}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::product_sum;

    fn params(k: i64, n: usize) -> FamilyParams {
        FamilyParams::new(k, n).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn matrices_match_known_entries() {
        let a = build_matrix(&params(1, 2));
        assert_eq!(a, IntMatrix::from_i64_rows(&[&[3, 12], &[1, 14]]).unwrap());
        let b = build_matrix(&params(1, 1));
        assert_eq!(b, IntMatrix::from_i64_rows(&[&[3]]).unwrap());
        let c = build_matrix(&params(2, 2));
        assert_eq!(c, IntMatrix::from_i64_rows(&[&[6, 168], &[4, 170]]).unwrap());
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(FamilyParams::new(0, 3).is_err());
        assert!(FamilyParams::new(2, 0).is_err());
    }

    #[test]
    fn decomposition_reconstructs_the_matrix() {
        let form = decompose(&params(1, 2));
        assert_eq!(form.shift(), &big(2));
        assert_eq!(form.v(), &[big(1), big(12)]);
        assert_eq!(form.reconstruct(), build_matrix(&params(1, 2)));

        assert_eq!(decompose(&params(1, 1)).v(), &[big(1)]);

        // v_3 = F(2,6)*L(2,5) = 70*82
        let form = decompose(&params(2, 3));
        assert_eq!(form.v(), &[big(4), big(168), big(5740)]);
        assert_eq!(form.reconstruct(), build_matrix(&params(2, 3)));
        assert_eq!(form.weight(), product_sum(2, 3).unwrap());
    }

    #[test]
    fn closed_det_matches_published_values() {
        assert_eq!(closed_det(&params(2, 1)).unwrap(), big(6));
        assert_eq!(closed_det(&params(2, 2)).unwrap(), big(348));
        assert_eq!(closed_det(&params(2, 3)).unwrap(), big(23656));
        assert_eq!(closed_det(&params(1, 2)).unwrap(), big(30));
        assert_eq!(closed_det(&params(3, 2)).unwrap(), big(2398));
    }

    #[test]
    fn closed_det_k1_row() {
        let want = [3i64, 30, 412, 5696, 78272];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(closed_det_k1(i + 1).unwrap(), big(w), "n={}", i + 1);
        }
        assert!(closed_det_k1(0).is_err());
    }

    #[test]
    fn closed_trace_values() {
        assert_eq!(closed_trace(&params(2, 2)).unwrap(), big(176));
        assert_eq!(closed_trace(&params(1, 2)).unwrap(), big(17));
        assert_eq!(closed_trace(&params(1, 1)).unwrap(), big(3));
        assert_eq!(closed_trace(&params(3, 3)).unwrap(), big(142_683));
    }

    #[test]
    fn lambda2_values_and_defining_identity() {
        assert_eq!(lambda2(&params(1, 2)).unwrap(), big(15));
        assert_eq!(lambda2(&params(2, 3)).unwrap(), big(5914));
        assert_eq!(lambda2(&params(1, 3)).unwrap(), big(103));
        for k in 1..=5 {
            for n in 1..=6 {
                let direct = big(2) + product_sum(k, n as i64).unwrap();
                assert_eq!(lambda2(&params(k, n)).unwrap(), direct, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn spectrum_reports() {
        let s = spectrum(&params(1, 2)).unwrap();
        assert_eq!(
            (s.lambda1, s.mult1, s.lambda2, s.mult2),
            (big(2), 1, big(15), 1)
        );
        assert_eq!(s.spectral_radius, big(15));
        assert_eq!(s.energy, big(17));

        let s1 = spectrum(&params(1, 1)).unwrap();
        assert_eq!(s1.mult1, 0);
        assert_eq!(s1.lambda2, big(3));
        assert_eq!(s1.spectral_radius, big(3));
        assert_eq!(s1.energy, big(3));

        let s2 = spectrum(&params(2, 2)).unwrap();
        assert_eq!(s2.lambda2, big(174));
        assert_eq!(s2.energy, big(176));
        assert_eq!(s2.mult1 + s2.mult2, 2);
    }

    #[test]
    fn closed_charpoly_expansions() {
        assert_eq!(closed_charpoly(&params(1, 2)).unwrap(), Polynomial::from_ints(&[30, -17, 1]));
        assert_eq!(closed_charpoly(&params(1, 1)).unwrap(), Polynomial::from_ints(&[3, -1]));
        assert_eq!(
            closed_charpoly(&params(2, 2)).unwrap(),
            Polynomial::from_ints(&[348, -176, 1])
        );
    }

    #[test]
    fn closed_inverse_examples() {
        let inv1 = closed_inverse(&params(1, 1)).unwrap();
        assert_eq!(inv1.get(0, 0), &Rational::new(big(1), big(3)));

        let inv = closed_inverse(&params(1, 2)).unwrap();
        assert_eq!(inv.get(0, 0), &Rational::new(big(7), big(15)));
        assert_eq!(inv.get(0, 1), &Rational::new(big(-2), big(5)));
        assert_eq!(inv.get(1, 0), &Rational::new(big(-1), big(30)));
        assert_eq!(inv.get(1, 1), &Rational::new(big(1), big(10)));
        assert_eq!(inv, rat_inverse(&build_matrix(&params(1, 2))).unwrap());

        let p = params(2, 2);
        let product = closed_inverse(&p)
            .unwrap()
            .mul(&RatMatrix::from_int(&build_matrix(&p)))
            .unwrap();
        assert!(product.is_identity());
    }

    #[test]
    fn closed_power_examples() {
        let p = params(1, 2);
        let squared = closed_power(&p, 2).unwrap();
        assert_eq!(squared, IntMatrix::from_i64_rows(&[&[21, 204], &[17, 208]]).unwrap());
        assert_eq!(closed_power(&p, 1).unwrap(), build_matrix(&p));
        assert_eq!(closed_power(&p, 0).unwrap(), IntMatrix::identity(2));
        assert_eq!(closed_power(&params(3, 4), 0).unwrap(), IntMatrix::identity(4));
    }

    #[test]
    fn verify_grid_smoke() {
        let report = verify_grid(1..=3, 1..=4, 3);
        assert_eq!(report.len(), 3 * 4 * 9);
        assert!(report.all_passed(), "first failure: {:?}", report.first_failure());
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn verify_grid_edge_cases() {
        assert!(verify_grid(6..=1, 1..=8, 2).is_empty());
        let single = verify_grid(1..=1, 1..=1, 0);
        assert_eq!(single.len(), 9);
        assert!(single.all_passed());
        assert_eq!(single.passed_count(), 9);
    }

    #[test]
    fn records_sorted_by_cell_and_check() {
        let report = verify_grid(1..=2, 1..=2, 1);
        let keys: Vec<_> = report.records().iter().map(|r| (r.k, r.n, r.check)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
