//! Two independent elimination kernels: Gaussian elimination with exact
//! division over fields, and fraction-free Bareiss elimination over integral
//! domains. Pivots are the first nonzero entry in scan order.

use super::Matrix;
use crate::arith::{Domain, Field};
use crate::error::{Error, Result};

fn check_uniform<T: crate::arith::Ring>(m: &Matrix<T>) -> Result<()> {
    match m.entries().first() {
        Some(first) if m.entries().iter().any(|e| !first.same_structure(e)) => {
            Err(Error::MixedCoefficients)
        }
        _ => Ok(()),
    }
}

/// Reduced row echelon form and the pivot columns.
fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, c)].inv().expect("nonzero pivot");
        for j in c..a.cols() {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..a.rows() {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols() {
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn gauss_rank<T: Field>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// `(rank, nullity)` with `rank + nullity = cols`.
pub fn rank_nullity<T: Field>(m: &Matrix<T>) -> Result<(usize, usize)> {
    check_uniform(m)?;
    let r = gauss_rank(m);
    Ok((r, m.cols() - r))
}

/// A basis of the right kernel `{v : m v = 0}`, one vector per free column.
pub fn kernel_basis<T: Field>(m: &Matrix<T>) -> Result<Vec<Vec<T>>> {
    check_uniform(m)?;
    let Some(proto) = m.entries().first() else {
        return Ok(Vec::new());
    };
    let (a, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![proto.zero_like(); m.cols()];
            v[f] = proto.one_like();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[(r, f)].clone();
            }
            v
        })
        .collect())
}

pub fn gauss_det<T: Field>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    check_uniform(m)?;
    let Some(proto) = m.entries().first() else {
        return Err(Error::DimensionMismatch(
            "determinant of an empty matrix".into(),
        ));
    };
    let mut a = m.clone();
    let mut det = proto.one_like();
    let n = a.rows();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Ok(proto.zero_like());
        };
        if p != c {
            a.swap_rows(p, c);
            det = -det;
        }
        let piv = a[(c, c)].clone();
        det = det * piv.clone();
        let inv = piv.inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone() * inv.clone();
            for j in c..n {
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(c, j)].clone();
            }
        }
    }
    Ok(det)
}

/// Fraction-free forward elimination. After the step at pivot `(r, c)` every
/// entry below is a minor of the original matrix, so the division by the
/// previous pivot is exact. Returns the echelon matrix, the rank and the
/// parity of row swaps.
fn bareiss_echelon<T: Domain>(m: &Matrix<T>) -> (Matrix<T>, usize, bool) {
    let mut a = m.clone();
    let Some(proto) = m.entries().first() else {
        return (a, 0, false);
    };
    let mut prev = proto.one_like();
    let mut r = 0;
    let mut odd = false;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            odd = !odd;
        }
        let piv = a[(r, c)].clone();
        for i in r + 1..a.rows() {
            for j in c + 1..a.cols() {
                let num = piv.clone() * a[(i, j)].clone() - a[(i, c)].clone() * a[(r, j)].clone();
                a[(i, j)] = num
                    .div_exact(&prev)
                    .expect("Bareiss division must be exact");
            }
            a[(i, c)] = proto.zero_like();
        }
        prev = piv;
        r += 1;
    }
    (a, r, odd)
}

pub fn bareiss_rank<T: Domain>(m: &Matrix<T>) -> usize {
    bareiss_echelon(m).1
}

/// Determinant by fraction-free elimination.
pub fn bareiss_det<T: Domain>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    check_uniform(m)?;
    let n = m.rows();
    let Some(proto) = m.entries().first() else {
        return Err(Error::DimensionMismatch(
            "determinant of an empty matrix".into(),
        ));
    };
    let (a, rank, odd) = bareiss_echelon(m);
    if rank < n {
        return Ok(proto.zero_like());
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if odd { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{LaurentPoly, NumberField, Poly, Rational};
    use num_bigint::BigInt;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_rank() {
        let i3 = Matrix::identity(3, &Rational::one());
        assert_eq!(rank_nullity(&i3).unwrap(), (3, 0));
    }

    #[test]
    fn tribonacci_det() {
        let a = z(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(bareiss_det(&a).unwrap(), BigInt::from(1));
    }

    #[test]
    fn det_of_one_minus_t_a() {
        // det(I - tA) = 1 - e1 t + e2 t^2 - e3 t^3 with e1 = 1, e2 = -1, e3 = 1
        let a = z(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]);
        let t = LaurentPoly::t();
        let m = Matrix::from_fn(3, 3, |i, j| {
            let delta = if i == j {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            };
            delta - t.clone() * LaurentPoly::constant(Rational::from_int(a[(i, j)].clone()))
        });
        assert_eq!(
            bareiss_det(&m).unwrap(),
            LaurentPoly::from_ints(0, &[1, -1, -1, -1])
        );
    }

    #[test]
    fn det_two_by_two_symbolic() {
        // entries a, b, c, d as distinct primes-in-x polynomials
        let e = |c: &[i64]| Poly::from_ints(c);
        let (a, b, c, d) = (e(&[1, 1]), e(&[2, 0, 1]), e(&[0, 3]), e(&[-1, 1]));
        let m = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]])
            .unwrap();
        assert_eq!(bareiss_det(&m).unwrap(), a * d - b * c);
    }

    #[test]
    fn rank_deficient_bareiss_matches_gauss() {
        let m = q(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 0, 1, 1], &[1, 2, 4, 5]]);
        assert_eq!(gauss_rank(&m), 2);
        assert_eq!(bareiss_rank(&m), 2);
        let mz = z(&[&[0, 2, 3], &[0, 4, 6], &[0, 1, 7]]);
        assert_eq!(bareiss_rank(&mz), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = kernel_basis(&m).unwrap();
        assert_eq!(ker.len(), 2);
        for v in ker {
            for i in 0..m.rows() {
                let s = (0..3).fold(Rational::zero(), |acc, j| {
                    acc + m[(i, j)].clone() * v[j].clone()
                });
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn mixed_number_fields_rejected() {
        let k1 = NumberField::new(Poly::from_ints(&[-2, 0, 1]));
        let k2 = NumberField::new(Poly::from_ints(&[-3, 0, 1]));
        let m = Matrix::new(1, 2, vec![k1.one(), k2.one()]);
        assert_eq!(m.err(), Some(Error::MixedCoefficients));
    }

    #[test]
    fn non_square_det_rejected() {
        let m = q(&[&[1, 2, 3]]);
        assert_eq!(bareiss_det(&m), Err(Error::NonSquare { rows: 1, cols: 3 }));
        assert_eq!(gauss_det(&m), Err(Error::NonSquare { rows: 1, cols: 3 }));
    }
}
