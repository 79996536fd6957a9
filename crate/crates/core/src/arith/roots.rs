use std::cmp::Ordering;

use num_bigint::BigInt;

use super::rational::format_scaled;
use super::{Poly, Rational};
use crate::error::{Error, Result};

/// The Sturm sequence `p₀ = p, p₁ = p′, pᵢ₊₁ = −(pᵢ₋₁ mod pᵢ)`.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<Poly>,
}

pub fn sturm_sequence(p: &Poly) -> SturmSequence {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if !d.is_zero() {
        seq.push(d);
    }
    while seq.len() >= 2 {
        let n = seq.len();
        let r = -seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    SturmSequence { seq }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmSequence {
    pub fn polys(&self) -> &[Poly] {
        &self.seq
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.seq.iter().map(|p| p.eval(x).signum()))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.seq.iter().map(|p| p.leading().signum()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.seq.iter().map(|p| {
            let s = p.leading().signum();
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(a, b]`; `a` must not be a root.
    pub fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf()
            .saturating_sub(self.variations_at_pos_inf())
    }
}

/// An open interval `(lo, hi)` containing exactly one real root of
/// `modulus`, with neither endpoint a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRootLabel {
    pub lo: Rational,
    pub hi: Rational,
    pub modulus: Poly,
}

impl RealRootLabel {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Shrinks the interval by one sign-based bisection step.
    fn bisect(&mut self) {
        let p = &self.modulus;
        let slo = p.eval(&self.lo).signum();
        let w = self.width();
        // Split at the midpoint unless that is a root; then try 1/3, 2/3, 1/4,
        // ... of the way across. The isolated root stays strictly inside.
        let mid = split_fractions()
            .map(|t| &self.lo + &(&w * &t))
            .find(|m| !p.eval(m).is_zero())
            .unwrap();
        if p.eval(&mid).signum() == slo {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Bisects until the interval is narrower than `width`.
    pub fn refine(&mut self, width: &Rational) {
        while &self.width() >= width {
            self.bisect();
        }
    }

    /// Compares the isolated root with `c`.
    pub fn cmp_rational(&self, c: &Rational) -> Ordering {
        let mut r = self.clone();
        loop {
            if c <= &r.lo {
                return Ordering::Greater;
            }
            if c >= &r.hi {
                return Ordering::Less;
            }
            if r.modulus.eval(c).is_zero() {
                return Ordering::Equal;
            }
            r.bisect();
        }
    }

    /// The root rounded half-up to `digits` decimal places.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.modulus.degree() == Some(1) {
            let root = -(self.modulus.coeff(0) * self.modulus.leading().recip().unwrap());
            return root.to_decimal(digits);
        }
        let scale = Rational::from_int(BigInt::from(10u32).pow(digits));
        let half = Rational::new(1, 2);
        let round = |x: &Rational| (&(x * &scale) + &half).floor();
        let mut r = self.clone();
        // An irrational root never sits on a rounding boundary, so this ends.
        loop {
            let (a, b) = (round(&r.lo), round(&r.hi));
            if a == b {
                return format_scaled(&a, digits);
            }
            r.bisect();
        }
    }
}

/// 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
fn split_fractions() -> impl Iterator<Item = Rational> {
    std::iter::once(Rational::new(1, 2))
        .chain((3i64..).flat_map(|d| [Rational::new(1, d), Rational::new(d - 1, d)]))
}

/// Isolates every real root of a squarefree polynomial with Sturm counts,
/// returning the intervals in increasing order.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<RealRootLabel>> {
    let Some(deg) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let sturm = sturm_sequence(p);
    // Cauchy bound: every root has |r| < 1 + max |aᵢ / aₙ|.
    let lead_inv = p.leading().recip().unwrap();
    let bound = p.coeffs()[..deg]
        .iter()
        .map(|c| (c * &lead_inv).abs())
        .max()
        .unwrap_or_default()
        + Rational::one();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count_in(&lo, &hi) {
            0 => {}
            1 => out.push(RealRootLabel {
                lo,
                hi,
                modulus: p.clone(),
            }),
            _ => {
                let w = &hi - &lo;
                let mid = split_fractions()
                    .map(|t| &lo + &(&w * &t))
                    .find(|m| !p.eval(m).is_zero())
                    .unwrap();
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}
