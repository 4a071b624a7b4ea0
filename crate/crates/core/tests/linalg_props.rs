//! Property tests for the exact linear-algebra oracles.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use fiblucas_matrix::linalg::{
    char_poly, det_bareiss, det_cofactor, mat_pow, outer, rat_inverse, IntMatrix, RatMatrix,
    Rational,
};

fn matrix_strategy(max_order: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(-99i64..=99, n * n).prop_map(move |cells| {
            IntMatrix::from_fn(n, |i, j| BigInt::from(cells[i * n + j]))
        })
    })
}

fn paired_matrices(max_order: usize) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    (1..=max_order).prop_flat_map(|n| {
        (
            prop::collection::vec(-99i64..=99, n * n),
            prop::collection::vec(-99i64..=99, n * n),
        )
            .prop_map(move |(a, b)| {
                (
                    IntMatrix::from_fn(n, |i, j| BigInt::from(a[i * n + j])),
                    IntMatrix::from_fn(n, |i, j| BigInt::from(b[i * n + j])),
                )
            })
    })
}

proptest! {
    // Two independent determinant algorithms agree on every small matrix.
    #![proptest_config(ProptestConfig::with_cases(500))]
    #[test]
    fn bareiss_agrees_with_cofactor(a in matrix_strategy(6)) {
        prop_assert_eq!(det_bareiss(&a), det_cofactor(&a).unwrap());
    }
}

proptest! {
    #[test]
    fn inverse_is_two_sided(a in matrix_strategy(5)) {
        if det_bareiss(&a).is_zero() {
            prop_assert!(matches!(rat_inverse(&a), Err(fiblucas_matrix::Error::Singular)));
        } else {
            let inv = rat_inverse(&a).unwrap();
            let a_rat = RatMatrix::from_int(&a);
            prop_assert!(a_rat.mul(&inv).unwrap().is_identity());
            prop_assert!(inv.mul(&a_rat).unwrap().is_identity());
        }
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in paired_matrices(5)) {
        let product = a.mul(&b).unwrap();
        prop_assert_eq!(det_bareiss(&product), det_bareiss(&a) * det_bareiss(&b));
    }

    // char_poly evaluated at 2n+1 rational points matches the determinant of
    // the shifted matrix: det(A - (p/q) I) = det(qA - pI) / q^n.
    #[test]
    fn charpoly_matches_shifted_determinants(
        a in matrix_strategy(5),
        points in prop::collection::vec((-30i64..=30, 1i64..=9), 11),
    ) {
        let n = a.order();
        let poly = char_poly(&a).unwrap();
        for &(p, q) in points.iter().take(2 * n + 1) {
            let lambda = Rational::new(BigInt::from(p), BigInt::from(q));
            let scaled = a.scale(&BigInt::from(q))
                .sub(&IntMatrix::identity(n).scale(&BigInt::from(p)))
                .unwrap();
            let expected = Rational::new(det_bareiss(&scaled), BigInt::from(q).pow(n as u32));
            prop_assert_eq!(poly.eval(&lambda), expected);
        }
    }

    #[test]
    fn power_exponents_add(a in matrix_strategy(4), i in 0u32..=3, j in 0u32..=3) {
        let lhs = mat_pow(&a, i + j);
        let rhs = mat_pow(&a, i).mul(&mat_pow(&a, j)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    // Powers of the rank-one matrix 1*v^T collapse to (sum v)^(m-1) * (1*v^T).
    #[test]
    fn rank_one_powers_collapse(
        v in prop::collection::vec(-50i64..=50, 1..=6),
        m in 1u32..=6,
    ) {
        let n = v.len();
        let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
        let p = outer(n, &v).unwrap();
        let weight: BigInt = v.iter().sum();
        let mut scalar = BigInt::one();
        for _ in 1..m {
            scalar *= &weight;
        }
        prop_assert_eq!(mat_pow(&p, m), p.scale(&scalar));
    }
}
