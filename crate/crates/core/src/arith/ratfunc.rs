use std::fmt;

use num_bigint::BigInt;

use super::{forward_ops, Domain, Field, Poly, Rational, Ring};

/// An element of the rational function field `Q(λ)`, kept as a reduced
/// fraction with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc::from_poly(&Poly::zero()));
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let lc = den.leading().recip().unwrap();
        Some(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: &Poly) -> Self {
        RatFunc {
            num: p.clone(),
            den: Poly::one(),
        }
    }

    /// The transcendental indeterminate `λ`.
    pub fn indeterminate() -> Self {
        RatFunc::from_poly(&Poly::x())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(&Poly::constant(c))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub(crate) fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        RatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }
    pub(crate) fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    pub(crate) fn mul_ref(&self, o: &Self) -> Self {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
    pub(crate) fn neg_ref(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_ops!(RatFunc);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num.display_with("l"))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.display_with("l"),
                self.den.display_with("l")
            )
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::from_poly(&Poly::zero())
    }
    fn one_like(&self) -> Self {
        RatFunc::from_poly(&Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn lift_int(&self, n: &BigInt) -> Self {
        RatFunc::constant(Rational::from_int(n.clone()))
    }
}

impl Domain for RatFunc {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}
