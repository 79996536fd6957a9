use super::Matrix;
use crate::arith::{laurent_normalize, LaurentPoly, Poly, Rational, Ring};
use crate::error::{Error, Result};

/// `U · A · V = D` over `Q[t, t⁻¹]` with `U`, `V` invertible and `D`
/// diagonal with `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmithForm {
    pub left: Matrix<LaurentPoly>,
    pub diagonal: Matrix<LaurentPoly>,
    pub right: Matrix<LaurentPoly>,
    /// Nonzero diagonal entries, each monic with nonzero constant term.
    pub divisors: Vec<LaurentPoly>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// The non-unit divisors as ordinary polynomials: the torsion part.
    pub fn torsion(&self) -> Vec<Poly> {
        self.divisors
            .iter()
            .filter(|d| !d.is_unit())
            .map(|d| d.to_poly_shifted(0).expect("normalized divisor"))
            .collect()
    }
}

struct PolySmith {
    u: Matrix<Poly>,
    d: Matrix<Poly>,
    v: Matrix<Poly>,
}

fn row_axpy(m: &mut Matrix<Poly>, target: usize, src: usize, q: &Poly) {
    for j in 0..m.cols() {
        let delta = q * &m[(src, j)];
        m[(target, j)] = &m[(target, j)] - &delta;
    }
}

fn col_axpy(m: &mut Matrix<Poly>, target: usize, src: usize, q: &Poly) {
    for i in 0..m.rows() {
        let delta = q * &m[(i, src)];
        m[(i, target)] = &m[(i, target)] - &delta;
    }
}

/// Euclidean Smith normal form over `Q[t]` with transforms.
fn poly_smith(a: &Matrix<Poly>) -> PolySmith {
    let (r, c) = (a.rows(), a.cols());
    let one = Poly::one();
    let mut d = a.clone();
    let mut u = Matrix::identity(r, &one);
    let mut v = Matrix::identity(c, &one);
    for s in 0..r.min(c) {
        loop {
            // pivot: nonzero entry of least degree in the trailing block
            let pivot = (s..r)
                .flat_map(|i| (s..c).map(move |j| (i, j)))
                .filter(|&(i, j)| !d[(i, j)].is_zero())
                .min_by_key(|&(i, j)| d[(i, j)].degree());
            let Some((pi, pj)) = pivot else {
                return PolySmith { u, d, v };
            };
            d.swap_rows(s, pi);
            u.swap_rows(s, pi);
            d.swap_cols(s, pj);
            v.swap_cols(s, pj);

            let mut clean = true;
            for i in s + 1..r {
                if d[(i, s)].is_zero() {
                    continue;
                }
                let (q, rem) = d[(i, s)].div_rem(&d[(s, s)]);
                row_axpy(&mut d, i, s, &q);
                row_axpy(&mut u, i, s, &q);
                clean &= rem.is_zero();
            }
            for j in s + 1..c {
                if d[(s, j)].is_zero() {
                    continue;
                }
                let (q, rem) = d[(s, j)].div_rem(&d[(s, s)]);
                col_axpy(&mut d, j, s, &q);
                col_axpy(&mut v, j, s, &q);
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let offender =
                (s + 1..r).find(|&i| (s + 1..c).any(|j| !d[(i, j)].rem(&d[(s, s)]).is_zero()));
            match offender {
                Some(i) => {
                    let minus_one = Poly::constant(-Rational::one());
                    row_axpy(&mut d, s, i, &minus_one);
                    row_axpy(&mut u, s, i, &minus_one);
                }
                None => break,
            }
        }
        let inv = Poly::constant(d[(s, s)].leading().recip().unwrap());
        for j in 0..c {
            d[(s, j)] = &d[(s, j)] * &inv;
        }
        for j in 0..r {
            u[(s, j)] = &u[(s, j)] * &inv;
        }
    }
    PolySmith { u, d, v }
}

/// Smith normal form over the Laurent ring `Q[t, t⁻¹]`.
///
/// The matrix is first multiplied by a power of the unit `t` so all entries
/// become polynomials; the Euclidean form over `Q[t]` is then computed and the
/// leftover powers of `t` on the diagonal are absorbed into `U`.
pub fn smith_normal_form(m: &Matrix<LaurentPoly>) -> Result<SmithForm> {
    if let Some(first) = m.entries().first() {
        if m.entries().iter().any(|e| !first.same_structure(e)) {
            return Err(Error::MixedCoefficients);
        }
    }
    let shift = m
        .entries()
        .iter()
        .filter(|e| !e.is_zero())
        .map(LaurentPoly::low_exponent)
        .min()
        .unwrap_or(0);
    let shifted = m.map(|e| {
        e.to_poly_shifted(shift)
            .expect("shift clears negative powers")
    });
    let PolySmith { u, d, v } = poly_smith(&shifted);

    let lift = |p: &Poly| LaurentPoly::from_poly(p);
    let mut left = u.map(lift);
    let mut diagonal = d.map(lift);
    let right = v.map(lift);
    let mut divisors = Vec::new();
    for i in 0..left.rows() {
        // U′ · m · V′ = t^shift · D′, and each divisor still carries t^k
        let mut unit_exp = -shift;
        if i < diagonal.cols() && !diagonal[(i, i)].is_zero() {
            let norm = laurent_normalize(&diagonal[(i, i)])?;
            unit_exp -= norm.exponent;
            let div = LaurentPoly::from_poly(&norm.primitive);
            diagonal[(i, i)] = div.clone();
            divisors.push(div);
        }
        for j in 0..left.cols() {
            left[(i, j)] = left[(i, j)].shift(unit_exp);
        }
    }
    Ok(SmithForm {
        left,
        diagonal,
        right,
        divisors,
    })
}
