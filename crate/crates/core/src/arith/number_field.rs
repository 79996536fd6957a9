use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::{forward_ops, Domain, Field, Poly, Rational, Ring};
use crate::error::{Error, Result};

/// `Q(α) = Q[x]/(q)` for an irreducible `q`.
///
/// Nothing here depends on which root `α` denotes: the arithmetic is the same
/// for every conjugate embedding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumberField {
    modulus: Arc<Poly>,
}

impl NumberField {
    /// The caller guarantees irreducibility; only the degree is checked.
    pub fn new(modulus: Poly) -> Self {
        assert!(
            modulus.degree().is_some_and(|d| d >= 1),
            "number field modulus must have positive degree"
        );
        NumberField {
            modulus: Arc::new(modulus.monic()),
        }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn element(&self, p: &Poly) -> NfElem {
        NfElem {
            residue: p.rem(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }

    /// The class of `x`, i.e. the generator `α`.
    pub fn generator(&self) -> NfElem {
        self.element(&Poly::x())
    }

    pub fn from_rational(&self, c: Rational) -> NfElem {
        self.element(&Poly::constant(c))
    }

    pub fn zero(&self) -> NfElem {
        self.element(&Poly::zero())
    }

    pub fn one(&self) -> NfElem {
        self.element(&Poly::one())
    }
}

/// An element of `Q[x]/(q)`, reduced to degree below `deg q`.
#[derive(Clone, PartialEq, Eq)]
pub struct NfElem {
    residue: Poly,
    modulus: Arc<Poly>,
}

impl NfElem {
    pub fn residue(&self) -> &Poly {
        &self.residue
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn field(&self) -> NumberField {
        NumberField {
            modulus: self.modulus.clone(),
        }
    }

    fn check(&self, o: &Self) {
        assert!(
            Arc::ptr_eq(&self.modulus, &o.modulus) || self.modulus == o.modulus,
            "number field elements from different fields"
        );
    }

    fn with(&self, residue: Poly) -> Self {
        NfElem {
            residue,
            modulus: self.modulus.clone(),
        }
    }

    /// Inverse by the extended Euclidean algorithm on `(residue, modulus)`.
    pub fn inverse(&self) -> Result<Self> {
        if self.residue.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.residue.ext_gcd(&self.modulus);
        // g is a unit exactly when the modulus is irreducible (or coprime)
        if !g.is_constant() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with(s.rem(&self.modulus)))
    }

    pub(crate) fn add_ref(&self, o: &Self) -> Self {
        self.check(o);
        self.with(&self.residue + &o.residue)
    }
    pub(crate) fn sub_ref(&self, o: &Self) -> Self {
        self.check(o);
        self.with(&self.residue - &o.residue)
    }
    pub(crate) fn mul_ref(&self, o: &Self) -> Self {
        self.check(o);
        self.with((&self.residue * &o.residue).rem(&self.modulus))
    }
    pub(crate) fn neg_ref(&self) -> Self {
        self.with(-&self.residue)
    }
}

forward_ops!(NfElem);

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue.display_with("a"))
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} mod ({})",
            self.residue.display_with("a"),
            self.modulus.display_with("a")
        )
    }
}

impl Ring for NfElem {
    fn zero_like(&self) -> Self {
        self.with(Poly::zero())
    }
    fn one_like(&self) -> Self {
        self.with(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }
    fn lift_int(&self, n: &BigInt) -> Self {
        self.with(Poly::constant(Rational::from_int(n.clone())))
    }
    fn same_structure(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus
    }
}

impl Domain for NfElem {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.inverse().ok().map(|inv| self.mul_ref(&inv))
    }
}

impl Field for NfElem {
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}
