//! Grid-wide structural invariants of the matrix family, beyond the
//! closed-form-versus-oracle checks in the verification harness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use fiblucas_matrix::bataille::{
    build_matrix, closed_charpoly, closed_det, closed_inverse, closed_power, closed_trace,
    decompose, lambda2, FamilyParams,
};
use fiblucas_matrix::linalg::{outer, IntMatrix};
use fiblucas_matrix::sequence::product_sum;

fn params(k: i64, n: usize) -> FamilyParams {
    FamilyParams::new(k, n).unwrap()
}

#[test]
fn matrix_is_shift_plus_rank_one_everywhere() {
    for k in 1..=6 {
        for n in 1..=8 {
            let p = params(k, n);
            let form = decompose(&p);
            let rebuilt = IntMatrix::identity(n)
                .scale(form.shift())
                .add(&outer(n, form.v()).unwrap())
                .unwrap();
            assert_eq!(rebuilt, build_matrix(&p), "k={k} n={n}");
            assert_eq!(form.weight(), product_sum(k, n as i64).unwrap(), "weight k={k} n={n}");
        }
    }
}

#[test]
fn dominant_eigenvalue_grows_in_both_parameters() {
    for k in 1..=6 {
        for n in 1..=7 {
            let here = lambda2(&params(k, n)).unwrap();
            let next_n = lambda2(&params(k, n + 1)).unwrap();
            assert!(next_n > here, "lambda2 not increasing in n at k={k} n={n}");
            let next_k = lambda2(&params(k + 1, n)).unwrap();
            assert!(next_k > here, "lambda2 not increasing in k at k={k} n={n}");
        }
    }
}

#[test]
fn charpoly_coefficients_carry_trace_and_det() {
    // With the det(A - x*I) convention: p(0) = det(A) and the coefficient of
    // x^(n-1) is (-1)^(n-1) * trace(A).
    for k in 1..=5 {
        for n in 1..=6 {
            let p = params(k, n);
            let poly = closed_charpoly(&p).unwrap();
            assert_eq!(poly.degree(), Some(n));
            let constant = poly.coeffs()[0].numer().clone();
            assert_eq!(constant, closed_det(&p).unwrap(), "det k={k} n={n}");
            let subleading = poly.coeffs()[n - 1].numer().clone();
            let trace = closed_trace(&p).unwrap();
            let expected = if (n - 1) % 2 == 0 { trace } else { -trace };
            assert_eq!(subleading, expected, "trace k={k} n={n}");
        }
    }
}

#[test]
fn closed_power_exponents_add() {
    for k in 1..=4 {
        for n in 1..=5 {
            let p = params(k, n);
            for i in 0..=3u32 {
                for j in 0..=3u32 {
                    let lhs = closed_power(&p, i + j).unwrap();
                    let rhs = closed_power(&p, i)
                        .unwrap()
                        .mul(&closed_power(&p, j).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "k={k} n={n} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn inverse_entries_are_reduced_with_positive_denominators() {
    for k in 1..=6 {
        for n in 1..=6 {
            let inv = closed_inverse(&params(k, n)).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let entry = inv.get(i, j);
                    assert!(entry.denom() > &BigInt::from(0), "k={k} n={n} ({i},{j})");
                    let gcd = entry.numer().abs().gcd(entry.denom());
                    assert!(gcd.is_one(), "unreduced entry at k={k} n={n} ({i},{j})");
                }
            }
        }
    }
}
