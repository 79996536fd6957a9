use std::fmt;

use num_bigint::BigInt;

use super::{forward_ops, write_terms, Domain, Poly, RatFunc, Rational, Ring};
use crate::error::{Error, Result};

/// A Laurent polynomial `Σ cᵢ tⁱ` over `Q`, stored densely from the lowest
/// exponent `offset` upwards.
///
/// Both the first and the last stored coefficient are nonzero; the zero
/// polynomial has no coefficients and offset 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<Rational>,
}

/// `f = constant · t^exponent · primitive` with `primitive` monic and
/// `primitive(0) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedLaurent {
    pub exponent: i64,
    pub constant: Rational,
    pub primitive: Poly,
}

impl LaurentPoly {
    pub fn new(offset: i64, coeffs: Vec<Rational>) -> Self {
        let Some(first) = coeffs.iter().position(|c| !c.is_zero()) else {
            return LaurentPoly::zero();
        };
        let last = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        LaurentPoly {
            offset: offset + first as i64,
            coeffs: coeffs[first..=last].to_vec(),
        }
    }

    pub fn from_ints(offset: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::new(offset, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::new(0, vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        LaurentPoly::new(k, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        LaurentPoly::monomial(Rational::one(), 1)
    }

    pub fn from_poly(p: &Poly) -> Self {
        LaurentPoly::new(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exponent(&self) -> i64 {
        self.offset
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let i = exp - self.offset;
        if i < 0 {
            return Rational::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.offset + i as i64, c))
    }

    /// Units of `Q[t, t⁻¹]` are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentPoly::new(self.offset, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Returns `(k, p)` with `self = t^k · p` and `p(0) ≠ 0`.
    pub fn split_power(&self) -> (i64, Poly) {
        (self.offset, Poly::new(self.coeffs.clone()))
    }

    /// The polynomial `t^(-shift) · self`, valid when the result has no
    /// negative exponents.
    pub fn to_poly_shifted(&self, shift: i64) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let lo = self.offset - shift;
        if lo < 0 {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); lo as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Some(Poly::new(coeffs))
    }

    pub fn derivative(&self) -> Self {
        LaurentPoly::new(
            self.offset - 1,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Rational::from(self.offset + i as i64))
                .collect(),
        )
    }

    /// Image in the fraction field `Q(t)`.
    pub fn to_ratfunc(&self) -> RatFunc {
        let (k, p) = self.split_power();
        if k >= 0 {
            RatFunc::from_poly(&(p * Poly::monomial(Rational::one(), k as usize)))
        } else {
            RatFunc::new(p, Poly::monomial(Rational::one(), (-k) as usize))
                .expect("nonzero denominator")
        }
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if self.offset < 0 && x.is_zero() {
            return None;
        }
        let (k, p) = self.split_power();
        Some(p.eval(x) * x.pow(k as i32))
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> LaurentDisplay<'a> {
        LaurentDisplay { poly: self, var }
    }

    pub(crate) fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(o.offset);
        let hi = self
            .high_exponent()
            .unwrap()
            .max(o.high_exponent().unwrap());
        LaurentPoly::new(lo, (lo..=hi).map(|e| self.coeff(e) + o.coeff(e)).collect())
    }
    pub(crate) fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    pub(crate) fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let p = Poly::new(self.coeffs.clone()) * Poly::new(o.coeffs.clone());
        LaurentPoly::new(self.offset + o.offset, p.coeffs().to_vec())
    }
    pub(crate) fn neg_ref(&self) -> Self {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_ops!(LaurentPoly);

/// Writes `f = c · t^k · p` with `p` monic and `p(0) ≠ 0`, the canonical
/// representative of `f` modulo units of `Q[t, t⁻¹]`.
pub fn laurent_normalize(f: &LaurentPoly) -> Result<NormalizedLaurent> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (exponent, p) = f.split_power();
    let constant = p.leading();
    Ok(NormalizedLaurent {
        exponent,
        primitive: p.monic(),
        constant,
    })
}

pub struct LaurentDisplay<'a> {
    poly: &'a LaurentPoly,
    var: &'a str,
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.poly.terms().map(|(e, c)| (e, c.clone())).collect();
        write_terms(f, terms.into_iter().rev(), self.var)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("t").fmt(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn lift_int(&self, n: &BigInt) -> Self {
        LaurentPoly::constant(Rational::from_int(n.clone()))
    }
}

impl Domain for LaurentPoly {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (ka, pa) = self.split_power();
        let (kb, pb) = other.split_power();
        let q = pa.div_exact(&pb)?;
        Some(LaurentPoly::new(ka - kb, q.coeffs().to_vec()))
    }
}
