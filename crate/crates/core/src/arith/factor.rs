//! Factorization over `Q` by Kronecker's method.
//!
//! Kronecker's search is exponential in the degree: a candidate factor of
//! degree `s` is pinned down by its values at `s + 1` integer points, each of
//! which must divide the corresponding value of the input, and every
//! combination of divisors is tried. That is fine for the degree ≤ 6
//! characteristic polynomials this crate meets and hopeless far beyond.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Poly, Rational};

/// `constant · Π fᵢ^mᵢ` with each `fᵢ` monic and irreducible over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub constant: Rational,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.constant.clone()), |acc, (f, m)| {
                acc * f.pow(*m)
            })
    }
}

/// Factors a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted by degree and then by coefficients.
pub fn factor(p: &Poly) -> Factorization {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let constant = p.leading();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&p.monic()) {
        for f in split_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Factorization { constant, factors }
}

/// Yun's algorithm: monic `f = Π aᵢ^i` with the `aᵢ` squarefree and
/// pairwise coprime. Constant parts are dropped.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let nb = b.div_rem(&a).0;
        let nc = d.div_rem(&a).0;
        d = &nc - &nb.derivative();
        b = nb;
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

/// Splits a squarefree polynomial into monic irreducible factors.
fn split_squarefree(f: &Poly) -> Vec<Poly> {
    let mut done = Vec::new();
    let mut todo = vec![integer_primitive(f)];
    while let Some(g) = todo.pop() {
        match find_factor(&g) {
            Some(h) => {
                let q = g.div_rem(&h).0;
                todo.push(integer_primitive(&h));
                todo.push(integer_primitive(&q));
            }
            None => done.push(g.monic()),
        }
    }
    done
}

fn integer_primitive(f: &Poly) -> Poly {
    Poly::from_bigints(&f.primitive_integer().1)
}

fn eval_int(f: &Poly, a: i64) -> BigInt {
    let v = f.eval(&Rational::from(a));
    debug_assert!(v.is_integer());
    v.numer().clone()
}

/// Positive divisors of a nonzero integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n
        .abs()
        .to_u128()
        .expect("value too large for Kronecker search");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Lagrange interpolation through `(xᵢ, yᵢ)`.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Poly {
    let mut acc = Poly::zero();
    for (i, (&xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                basis = basis * Poly::from_ints(&[-xj, 1]);
                denom = denom * Rational::from(xi - xj);
            }
        }
        let c = Rational::from_int(yi.clone()) * denom.recip().unwrap();
        acc = acc + basis.scale(&c);
    }
    acc
}

/// A proper factor of a primitive integer polynomial, or `None` when it is
/// irreducible over `Q`.
fn find_factor(f: &Poly) -> Option<Poly> {
    let deg = f.degree()?;
    if deg <= 1 {
        return None;
    }
    // Candidate points 0, 1, -1, 2, -2, ...; a zero value yields a linear factor.
    let mut points: Vec<(i64, BigInt)> = Vec::new();
    for k in 0..(2 * deg as i64 + 4) {
        let a = if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 };
        let v = eval_int(f, a);
        if v.is_zero() {
            return Some(Poly::from_ints(&[-a, 1]));
        }
        points.push((a, v));
    }
    points.sort_by_key(|(_, u)| u.abs());

    for s in 1..=deg / 2 {
        let chosen = &points[..=s];
        let xs: Vec<i64> = chosen.iter().map(|(a, _)| *a).collect();
        let choices: Vec<Vec<BigInt>> = chosen
            .iter()
            .enumerate()
            .map(|(i, (_, v))| {
                let pos = divisors(v);
                if i == 0 {
                    // fixes the overall sign of the candidate
                    pos
                } else {
                    pos.iter().flat_map(|d| [d.clone(), -d.clone()]).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let ys: Vec<BigInt> = idx
                .iter()
                .zip(&choices)
                .map(|(&i, c)| c[i].clone())
                .collect();
            let g = interpolate(&xs, &ys);
            if g.degree() == Some(s) && g.coeffs().iter().all(Rational::is_integer) {
                let (q, r) = f.div_rem(&g);
                if r.is_zero() && q.coeffs().iter().all(Rational::is_integer) {
                    return Some(g);
                }
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    None
}
