#![allow(dead_code)]

use mnk_core::{MappingTorus, Matrix};
use num_bigint::BigInt;
use rand::Rng;

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn tribonacci() -> MappingTorus {
    MappingTorus::build(int_matrix(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]])).unwrap()
}

/// Random matrix in GL_n(Z) from elementary row operations; `det` is ±1.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, det: i64) -> Matrix<BigInt> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 1;
    }
    if n > 1 {
        for _ in 0..3 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let src = a[j].clone();
            for (x, y) in a[i].iter_mut().zip(&src) {
                *x += c * y;
            }
        }
    }
    if det < 0 {
        for x in a[0].iter_mut() {
            *x = -*x;
        }
    }
    Matrix::from_rows(
        a.into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect(),
    )
    .unwrap()
}

pub fn random_int_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> Matrix<BigInt> {
    Matrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// A random `P ∈ SL_n(Z)` together with `P⁻¹`.
pub fn random_sl_pair(rng: &mut impl Rng, n: usize) -> (Matrix<BigInt>, Matrix<BigInt>) {
    let mut p = vec![vec![0i64; n]; n];
    let mut q = p.clone();
    for i in 0..n {
        p[i][i] = 1;
        q[i][i] = 1;
    }
    if n > 1 {
        for _ in 0..3 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            // P ← E·P adds c·row j to row i; P⁻¹ ← P⁻¹·E⁻¹ subtracts c·col i from col j
            let src = p[j].clone();
            for (x, y) in p[i].iter_mut().zip(&src) {
                *x += c * y;
            }
            for row in q.iter_mut() {
                row[j] -= c * row[i];
            }
        }
    }
    let to = |a: Vec<Vec<i64>>| {
        Matrix::from_rows(
            a.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .unwrap()
    };
    (to(p), to(q))
}

pub fn rng_from_env(default: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let seed = std::env::var("MNK_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default);
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
