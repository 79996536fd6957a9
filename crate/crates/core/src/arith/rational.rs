use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{forward_ops, Domain, Field, Ring};

/// An arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!Zero::is_zero(&denom), "rational with zero denominator");
        Rational(BigRational::new(numer.into(), denom))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational(self.0.recip()))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn pow(&self, e: i32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, e))
    }

    pub(crate) fn add_ref(&self, o: &Self) -> Self {
        Rational(&self.0 + &o.0)
    }
    pub(crate) fn sub_ref(&self, o: &Self) -> Self {
        Rational(&self.0 - &o.0)
    }
    pub(crate) fn mul_ref(&self, o: &Self) -> Self {
        Rational(&self.0 * &o.0)
    }
    pub(crate) fn neg_ref(&self) -> Self {
        Rational(-&self.0)
    }

    /// Decimal string rounded half-up to `digits` places.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = Rational::from_int(scale.clone()) * self.clone() + Rational::new(1, 2);
        format_scaled(&scaled.floor(), digits)
    }
}

/// Formats `n / 10^digits` as a decimal string.
pub(crate) fn format_scaled(n: &BigInt, digits: u32) -> String {
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let d = digits as usize;
    let padded = if s.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = padded.split_at(padded.len() - d);
    let sign = if neg { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

forward_ops!(Rational);

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

impl FromStr for Rational {
    type Err = String;

    /// Accepts `p`, `-p` and `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse =
            |t: &str| BigInt::from_str(t.trim()).map_err(|e| format!("invalid integer {t:?}: {e}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if Zero::is_zero(&q) {
                    return Err("zero denominator".into());
                }
                Ok(Rational::new(parse(p)?, q))
            }
            None => Ok(Rational::from_int(parse(s)?)),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn lift_int(&self, n: &BigInt) -> Self {
        Rational::from_int(n.clone())
    }
}

impl Domain for Rational {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self.mul_ref(&r))
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}
