use std::fmt;

use super::{bareiss_rank, gauss_rank, Matrix};
use crate::arith::{NfElem, RatFunc, Rational};
use crate::error::{Error, Result};

/// Which elimination kernel computes a rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elimination {
    Gauss,
    Bareiss,
}

/// A matrix over one of the coefficient fields a twist can select.
#[derive(Clone, PartialEq, Eq)]
pub enum FieldMatrix {
    Rational(Matrix<Rational>),
    NumberField(Matrix<NfElem>),
    Function(Matrix<RatFunc>),
}

macro_rules! each {
    ($self:expr, $m:ident => $body:expr) => {
        match $self {
            FieldMatrix::Rational($m) => $body,
            FieldMatrix::NumberField($m) => $body,
            FieldMatrix::Function($m) => $body,
        }
    };
}

impl FieldMatrix {
    pub fn rows(&self) -> usize {
        each!(self, m => m.rows())
    }

    pub fn cols(&self) -> usize {
        each!(self, m => m.cols())
    }

    pub fn rank(&self, kernel: Elimination) -> usize {
        match kernel {
            Elimination::Gauss => each!(self, m => gauss_rank(m)),
            Elimination::Bareiss => each!(self, m => bareiss_rank(m)),
        }
    }

    pub fn nullity(&self, kernel: Elimination) -> usize {
        self.cols() - self.rank(kernel)
    }

    pub fn is_zero(&self) -> bool {
        each!(self, m => m.is_zero())
    }

    pub fn checked_mul(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        use FieldMatrix::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a.checked_mul(b).map(Rational),
            (NumberField(a), NumberField(b)) => a.checked_mul(b).map(NumberField),
            (Function(a), Function(b)) => a.checked_mul(b).map(Function),
            _ => Err(Error::MixedCoefficients),
        }
    }

    /// Entries rendered as strings, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        each!(self, m => m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect())
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        each!(self, m => fmt::Display::fmt(m, f))
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        each!(self, m => fmt::Debug::fmt(m, f))
    }
}
