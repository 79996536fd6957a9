//! Fixed inputs for the benchmarks.

use mnk_core::{LaurentPoly, MappingTorus, Matrix};
use num_bigint::BigInt;

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
    .expect("rectangular")
}

pub fn tribonacci() -> MappingTorus {
    MappingTorus::build(int_matrix(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]])).expect("unimodular")
}

/// A 4×4 SL matrix with a real eigenvalue > 1.
pub fn four_torus() -> MappingTorus {
    MappingTorus::build(int_matrix(&[
        &[0, 0, 0, 1],
        &[1, 0, 0, 1],
        &[0, 1, 0, 0],
        &[0, 0, 1, 1],
    ]))
    .expect("unimodular")
}

/// `t·Λ²A − I` for the 4×4 example: a 6×6 Laurent matrix.
pub fn wang_block() -> Matrix<LaurentPoly> {
    mnk_core::novikov::wang_matrices(&four_torus())
        .swap_remove(2)
        .matrix
}
