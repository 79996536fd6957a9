//! The exact scalar tower: rationals, polynomials, Laurent polynomials,
//! number fields and rational functions, with real-root isolation and
//! factorization over `Q`.

mod factor;
mod laurent;
mod number_field;
mod poly;
mod ratfunc;
mod rational;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

pub use factor::{factor, Factorization};
pub use laurent::{laurent_normalize, LaurentPoly, NormalizedLaurent};
pub use number_field::{NfElem, NumberField};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use roots::{isolate_real_roots, sturm_sequence, RealRootLabel, SturmSequence};

/// A commutative ring whose elements know their own structure.
///
/// Constants are produced from a prototype element because some structures
/// (number fields) need context that a bare `zero()` cannot supply.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Embeds an integer into the structure of `self`.
    fn lift_int(&self, n: &BigInt) -> Self;

    /// Whether `self` and `other` live in the same coefficient structure.
    fn same_structure(&self, _other: &Self) -> bool {
        true
    }
}

/// An integral domain with exact division.
pub trait Domain: Ring {
    /// `Some(q)` with `q * other == self` when `other` divides `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::from(0)
    }
    fn one_like(&self) -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn lift_int(&self, n: &BigInt) -> Self {
        n.clone()
    }
}

impl Domain for BigInt {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Ring::is_zero(other) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, other);
        Ring::is_zero(&r).then_some(q)
    }
}

/// Implements the by-value and by-reference arithmetic operators for a type
/// with inherent `add_ref`, `sub_ref`, `mul_ref` and `neg_ref` methods.
macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                self.add_ref(&rhs)
            }
        }
        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                self.sub_ref(&rhs)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                self.mul_ref(&rhs)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl<'a> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
    };
}
pub(crate) use forward_ops;

/// Writes `x^k` style monomials: `c`, `c*x`, `c*x^k`.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, Rational)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (exp, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let coeff_shown = exp == 0 || !abs.is_one();
        if coeff_shown {
            if abs.is_integer() || exp == 0 {
                write!(f, "{abs}")?;
            } else {
                write!(f, "({abs})")?;
            }
        }
        if exp != 0 {
            if coeff_shown {
                write!(f, "*")?;
            }
            if exp == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{exp}")?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
