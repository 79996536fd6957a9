mod common;

use common::{random_int_matrix, random_unimodular, rng_from_env};
use mnk_core::arith::Domain;
use mnk_core::linalg::{bareiss_det, bareiss_rank, gauss_det, gauss_rank, k_subsets};
use mnk_core::{
    exterior_power, smith_normal_form, LaurentPoly, Matrix, NumberField, Poly, Rational,
};
use num_bigint::BigInt;
use rand::Rng;

fn to_q(m: &Matrix<BigInt>) -> Matrix<Rational> {
    m.map(|x| Rational::from(x.clone()))
}

fn binom(n: usize, k: usize) -> usize {
    k_subsets(n, k).len()
}

#[test]
fn bareiss_det_agrees_with_gauss() {
    let mut rng = rng_from_env(11);
    for _ in 0..50 {
        let n = rng.gen_range(1..=5);
        let m = random_int_matrix(&mut rng, n, 6);
        let q = to_q(&m);
        assert_eq!(
            Rational::from(bareiss_det(&m).unwrap()),
            gauss_det(&q).unwrap()
        );
        assert_eq!(bareiss_rank(&q), gauss_rank(&q));
    }
}

#[test]
fn rank_is_transpose_invariant() {
    let mut rng = rng_from_env(12);
    let k = NumberField::new(Poly::from_ints(&[-1, -1, -1, 1]));
    for _ in 0..30 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        // low-rank products so the rank is not always full
        let inner = rng.gen_range(1..=3);
        let a = Matrix::from_fn(r, inner, |_, _| Rational::from(rng.gen_range(-3i64..=3)));
        let b = Matrix::from_fn(inner, c, |_, _| Rational::from(rng.gen_range(-3i64..=3)));
        let m = a.checked_mul(&b).unwrap();
        assert_eq!(gauss_rank(&m), gauss_rank(&m.transpose()));
        let x = k.generator();
        let mk = m.map(|q| {
            x.clone() * k.from_rational(q.clone()) + k.from_rational(q.clone() * q.clone())
        });
        assert_eq!(gauss_rank(&mk), gauss_rank(&mk.transpose()));
        assert_eq!(bareiss_rank(&mk), gauss_rank(&mk));
    }
}

#[test]
fn exterior_power_is_functorial() {
    let mut rng = rng_from_env(13);
    for _ in 0..50 {
        let n = rng.gen_range(1..=4);
        let a = random_int_matrix(&mut rng, n, 3);
        let b = random_int_matrix(&mut rng, n, 3);
        let ab = a.checked_mul(&b).unwrap();
        let det_a = bareiss_det(&a).unwrap();
        for k in 0..=n {
            let lhs = exterior_power(&ab, k).unwrap();
            let rhs = exterior_power(&a, k)
                .unwrap()
                .checked_mul(&exterior_power(&b, k).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            let ek = exterior_power(&a, k).unwrap();
            let expected = if k == 0 {
                BigInt::from(1)
            } else {
                num_traits::pow(det_a.clone(), binom(n - 1, k - 1))
            };
            assert_eq!(bareiss_det(&ek).unwrap(), expected, "n={n} k={k}");
        }
    }
}

#[test]
fn exterior_power_of_unimodular_is_unimodular() {
    let mut rng = rng_from_env(14);
    for _ in 0..20 {
        let n = rng.gen_range(2..=4);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let a = random_unimodular(&mut rng, n, sign);
        for k in 0..=n {
            let d = bareiss_det(&exterior_power(&a, k).unwrap()).unwrap();
            assert!(d == BigInt::from(1) || d == BigInt::from(-1));
        }
    }
}

fn random_laurent_matrix(rng: &mut impl Rng, r: usize, c: usize) -> Matrix<LaurentPoly> {
    Matrix::from_fn(r, c, |_, _| {
        if rng.gen_bool(0.3) {
            LaurentPoly::zero()
        } else {
            let coeffs: Vec<i64> = (0..rng.gen_range(1..=3))
                .map(|_| rng.gen_range(-3..=3))
                .collect();
            LaurentPoly::from_ints(rng.gen_range(-1..=1), &coeffs)
        }
    })
}

#[test]
fn smith_form_reconstructs_and_divides() {
    let mut rng = rng_from_env(15);
    for _ in 0..50 {
        let (r, c) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let m = random_laurent_matrix(&mut rng, r, c);
        let s = smith_normal_form(&m).unwrap();
        let udv = s
            .left
            .checked_mul(&m)
            .unwrap()
            .checked_mul(&s.right)
            .unwrap();
        assert_eq!(udv, s.diagonal);
        for i in 0..r {
            for j in 0..c {
                if i != j {
                    assert!(s.diagonal[(i, j)].is_zero());
                }
            }
        }
        for w in s.divisors.windows(2) {
            assert!(
                w[1].div_exact(&w[0]).is_some(),
                "{} does not divide {}",
                w[0],
                w[1]
            );
        }
        // U and V invertible: determinants are units
        assert!(laurent_det(&s.left).is_unit());
        assert!(laurent_det(&s.right).is_unit());
        let q = m.map(|x| x.to_ratfunc());
        assert_eq!(s.rank(), gauss_rank(&q));
    }
}

fn laurent_det(m: &Matrix<LaurentPoly>) -> LaurentPoly {
    bareiss_det(m).unwrap()
}
