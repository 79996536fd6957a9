use num_bigint::BigInt;

use super::{bareiss_det, Matrix};
use crate::arith::{Domain, Ring};
use crate::error::{Error, Result};

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The `k`-th compound matrix: entry `(I, J)` is the minor on rows `I` and
/// columns `J`, with `I`, `J` running over lexicographically ordered
/// `k`-subsets. This is the matrix of `Λᵏ m` in the basis
/// `e_I = e_{i₁} ∧ … ∧ e_{iₖ}`.
pub fn exterior_power<T: Domain>(m: &Matrix<T>, k: usize) -> Result<Matrix<T>> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if k > n {
        return Err(Error::DegreeOutOfRange { k, n });
    }
    let Some(proto) = m.entries().first() else {
        return Err(Error::DimensionMismatch(
            "exterior power of an empty matrix".into(),
        ));
    };
    if k == 0 {
        return Ok(Matrix::identity(1, proto));
    }
    let subsets = k_subsets(n, k);
    let mut data = Vec::with_capacity(subsets.len() * subsets.len());
    for rows in &subsets {
        for cols in &subsets {
            data.push(bareiss_det(&m.submatrix(rows, cols))?);
        }
    }
    Matrix::new(subsets.len(), subsets.len(), data)
}

/// Columns express the cyclic basis `{e₂∧e₃, e₃∧e₁, e₁∧e₂}` of `Λ²` of a
/// 3-dimensional space in the lexicographic basis `{e₁∧e₂, e₁∧e₃, e₂∧e₃}`.
/// It is a signed permutation, so its inverse is its transpose.
pub fn cyclic_h2_change_of_basis() -> Matrix<BigInt> {
    let z = |v: i64| BigInt::from(v);
    Matrix::from_rows(vec![
        vec![z(0), z(0), z(1)],
        vec![z(0), z(-1), z(0)],
        vec![z(1), z(0), z(0)],
    ])
    .unwrap()
}

impl<T: Ring> Matrix<T> {
    /// Rewrites a lexicographic-basis `Λ²` matrix of a 3×3 map in the cyclic
    /// basis `{e₂∧e₃, e₃∧e₁, e₁∧e₂}`, i.e. computes `Pᵀ M P`.
    pub fn in_cyclic_h2_basis(&self) -> Result<Matrix<T>> {
        if (self.rows(), self.cols()) != (3, 3) {
            return Err(Error::DimensionMismatch(
                "cyclic basis needs a 3x3 matrix".into(),
            ));
        }
        let proto = &self[(0, 0)];
        let p = cyclic_h2_change_of_basis().map(|e| proto.lift_int(e));
        p.transpose().checked_mul(self)?.checked_mul(&p)
    }
}
