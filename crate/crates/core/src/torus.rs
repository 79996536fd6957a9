//! The mapping torus `Tⁿ ×_A S¹` in algebraic form and the twist `λ = eˢ`
//! of the closed one-form `θ = s · p*ϑ` pulled back from the base circle.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{
    factor, isolate_real_roots, Factorization, Field, NfElem, NumberField, Poly, RatFunc, Rational,
    RealRootLabel,
};
use crate::error::{Error, Result};
use crate::linalg::{bareiss_det, exterior_power, FieldMatrix, Matrix};

/// An irreducible factor of the characteristic polynomial together with one
/// of its real roots greater than 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCandidate {
    pub factor: Poly,
    pub root: RealRootLabel,
}

/// `Tⁿ ×_A S¹` for a unimodular integer matrix `A`, taken as the action of the
/// monodromy on `H¹(Tⁿ)` in the basis `{dx₁, …, dxₙ}`.
#[derive(Clone, Debug)]
pub struct MappingTorus {
    monodromy: Matrix<BigInt>,
    det: BigInt,
    charpoly: Poly,
    factorization: Factorization,
    candidates: Vec<RootCandidate>,
    selected: Option<usize>,
    warnings: Vec<String>,
}

/// Orders two isolated real roots of coprime polynomials.
fn cmp_roots(a: &RealRootLabel, b: &RealRootLabel) -> Ordering {
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if a.width() >= b.width() {
            a.refine(&(a.width() * Rational::new(1, 2)));
        } else {
            b.refine(&(b.width() * Rational::new(1, 2)));
        }
    }
}

impl MappingTorus {
    /// Builds the torus and selects the largest real eigenvalue `α > 1` (if any)
    /// as the Lee eigenvalue.
    pub fn build(a: Matrix<BigInt>) -> Result<Self> {
        MappingTorus::build_with_root(a, None)
    }

    /// As [`MappingTorus::build`], with `root_select` indexing the real roots
    /// `> 1` of the characteristic polynomial in decreasing order.
    pub fn build_with_root(a: Matrix<BigInt>, root_select: Option<usize>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NonSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if a.rows() == 0 {
            return Err(Error::DimensionMismatch("monodromy of a 0-torus".into()));
        }
        let det = bareiss_det(&a)?;
        if !One::is_one(&det.abs()) {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        let mut warnings = Vec::new();
        if det.is_negative() {
            warnings
                .push("det A = -1: orientation-reversing monodromy (outside SL_n(Z))".to_string());
        }
        let n = a.rows();
        let x = Poly::x();
        let char_matrix = Matrix::from_fn(n, n, |i, j| {
            let entry = Poly::constant(Rational::from_int(a[(i, j)].clone()));
            if i == j {
                &x - &entry
            } else {
                -entry
            }
        });
        let charpoly = bareiss_det(&char_matrix)?;
        let factorization = factor(&charpoly);

        let mut candidates = Vec::new();
        for (f, _) in &factorization.factors {
            for root in isolate_real_roots(f)? {
                if root.cmp_rational(&Rational::one()) == Ordering::Greater {
                    candidates.push(RootCandidate {
                        factor: f.clone(),
                        root,
                    });
                }
            }
        }
        candidates.sort_by(|p, q| cmp_roots(&q.root, &p.root));

        let selected = match root_select {
            None => (!candidates.is_empty()).then_some(0),
            Some(i) if i < candidates.len() => Some(i),
            Some(i) => {
                return Err(Error::ModeUnavailable(format!(
                    "root index {i} requested but only {} real eigenvalue(s) > 1 exist",
                    candidates.len()
                )))
            }
        };
        if candidates.len() > 1 && root_select.is_none() {
            warnings.push(format!(
                "{} real eigenvalues > 1; selected the largest",
                candidates.len()
            ));
        }
        Ok(MappingTorus {
            monodromy: a,
            det,
            charpoly,
            factorization,
            candidates,
            selected,
            warnings,
        })
    }

    /// Fiber dimension `n`.
    pub fn n(&self) -> usize {
        self.monodromy.rows()
    }

    pub fn monodromy(&self) -> &Matrix<BigInt> {
        &self.monodromy
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// `det(xI − A)`.
    pub fn charpoly(&self) -> &Poly {
        &self.charpoly
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn root_candidates(&self) -> &[RootCandidate] {
        &self.candidates
    }

    /// Irreducible factor carrying the selected eigenvalue `α > 1`.
    pub fn modulus(&self) -> Option<&Poly> {
        self.selected.map(|i| &self.candidates[i].factor)
    }

    pub fn alpha(&self) -> Option<&RealRootLabel> {
        self.selected.map(|i| &self.candidates[i].root)
    }

    pub fn lee_field(&self) -> Option<NumberField> {
        self.modulus().map(|m| NumberField::new(m.clone()))
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `A ∈ SL₃(Z)` with irreducible characteristic polynomial, exactly one
    /// real eigenvalue, and that eigenvalue `> 1`: the monodromies of Inoue
    /// surfaces `S⁰`.
    pub fn is_inoue_type(&self) -> bool {
        self.n() == 3
            && One::is_one(&self.det)
            && self.factorization.factors.len() == 1
            && self.factorization.factors[0].1 == 1
            && isolate_real_roots(&self.charpoly).is_ok_and(|r| r.len() == 1)
            && self.candidates.len() == 1
    }

    pub fn induced_maps(&self) -> InducedMaps {
        induced_maps(self)
    }
}

/// The maps `M_k = Λᵏ A` on `Hᵏ(Tⁿ)` in the lexicographic wedge basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMaps {
    pub maps: Vec<Matrix<BigInt>>,
}

pub fn induced_maps(mt: &MappingTorus) -> InducedMaps {
    let maps = (0..=mt.n())
        .map(|k| exterior_power(&mt.monodromy, k).expect("degree within range"))
        .collect();
    InducedMaps { maps }
}

/// The closed one-form `θ = s · p*ϑ`, recorded through `λ = eˢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistSpec {
    /// `θ = 0`, `λ = 1`.
    Untwisted,
    RationalWeight(Rational),
    /// `λ = α`, the selected real eigenvalue `> 1`; `s = ln α`.
    LeeEigenvalue,
    /// `λ` an indeterminate over `Q`, standing in for a transcendental `eˢ`.
    Transcendental,
}

impl TwistSpec {
    pub fn validate(&self, mt: &MappingTorus) -> Result<()> {
        match self {
            TwistSpec::RationalWeight(l) if l.is_zero() => Err(Error::ModeUnavailable(
                "rational weight must be nonzero".into(),
            )),
            TwistSpec::LeeEigenvalue if mt.modulus().is_none() => Err(Error::ModeUnavailable(
                "no real eigenvalue > 1 for the Lee twist".into(),
            )),
            _ => Ok(()),
        }
    }

    /// `λ = 1`, i.e. `θ` exact.
    pub fn is_exact(&self) -> bool {
        match self {
            TwistSpec::Untwisted => true,
            TwistSpec::RationalWeight(l) => l.is_one(),
            _ => false,
        }
    }

    /// Rank of the group of periods of `θ`: 0 when exact, otherwise 1.
    pub fn free_generators(&self) -> usize {
        usize::from(!self.is_exact())
    }

    /// The generator of the period group `s · Z`.
    pub fn period_generator(&self) -> String {
        match self {
            _ if self.is_exact() => "0 (theta exact)".to_string(),
            TwistSpec::RationalWeight(l) => format!("ln({l})"),
            TwistSpec::LeeEigenvalue => "ln(alpha)".to_string(),
            TwistSpec::Transcendental => "s with e^s transcendental".to_string(),
            TwistSpec::Untwisted => unreachable!(),
        }
    }

    /// Resolves `λ` in the coefficient field the mode calls for.
    pub fn scalar(&self, mt: &MappingTorus) -> Result<TwistScalar> {
        self.validate(mt)?;
        Ok(match self {
            TwistSpec::Untwisted => TwistScalar::Rational(Rational::one()),
            TwistSpec::RationalWeight(l) => TwistScalar::Rational(l.clone()),
            TwistSpec::LeeEigenvalue => {
                TwistScalar::NumberField(mt.lee_field().expect("validated").generator())
            }
            TwistSpec::Transcendental => TwistScalar::Function(RatFunc::indeterminate()),
        })
    }
}

impl fmt::Display for TwistSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistSpec::Untwisted => write!(f, "untwisted"),
            TwistSpec::RationalWeight(l) => write!(f, "rational:{l}"),
            TwistSpec::LeeEigenvalue => write!(f, "lee"),
            TwistSpec::Transcendental => write!(f, "transcendental"),
        }
    }
}

/// `λ` as an element of its coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistScalar {
    Rational(Rational),
    NumberField(NfElem),
    Function(RatFunc),
}

/// `c₁ · I + c₂ · λ · M` over the field of `λ`.
fn affine_block<T: Field>(lambda: &T, m: &Matrix<BigInt>, c_id: i64, c_lm: i64) -> Matrix<T> {
    let id = lambda.lift_int(&BigInt::from(c_id));
    let lm = lambda.clone() * lambda.lift_int(&BigInt::from(c_lm));
    Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        let e = lm.clone() * lambda.lift_int(&m[(i, j)]);
        if i == j {
            id.clone() + e
        } else {
            e
        }
    })
}

/// `[[I, −I], [I, −λ·M]]`.
fn gamma_block<T: Field>(lambda: &T, m: &Matrix<BigInt>) -> Matrix<T> {
    let n = m.rows();
    let id = Matrix::identity(n, lambda);
    let neg_id = id.scale(&-lambda.one_like());
    let neg_lm = affine_block(lambda, m, 0, -1);
    Matrix::block2x2(&id, &neg_id, &id, &neg_lm).expect("square blocks")
}

macro_rules! over_field {
    ($self:expr, $l:ident => $body:expr) => {
        match $self {
            TwistScalar::Rational($l) => FieldMatrix::Rational($body),
            TwistScalar::NumberField($l) => FieldMatrix::NumberField($body),
            TwistScalar::Function($l) => FieldMatrix::Function($body),
        }
    };
}

impl TwistScalar {
    /// `I − λ·M`.
    pub fn one_minus_lambda(&self, m: &Matrix<BigInt>) -> FieldMatrix {
        over_field!(self, l => affine_block(l, m, 1, -1))
    }

    /// `λ·M − I`.
    pub fn lambda_minus_one(&self, m: &Matrix<BigInt>) -> FieldMatrix {
        over_field!(self, l => affine_block(l, m, -1, 1))
    }

    /// `(−1)ᵏ (λ·M − I)`.
    pub fn signed_lambda_minus_one(&self, m: &Matrix<BigInt>, k: usize) -> FieldMatrix {
        let s = if k.is_multiple_of(2) { 1 } else { -1 };
        over_field!(self, l => affine_block(l, m, -s, s))
    }

    /// `[[I, −I], [I, −λ·M]]`.
    pub fn gamma(&self, m: &Matrix<BigInt>) -> FieldMatrix {
        over_field!(self, l => gamma_block(l, m))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, TwistScalar::Rational(l) if l.is_one())
    }

    /// Human-readable name of the coefficient field.
    pub fn field_description(&self) -> String {
        match self {
            TwistScalar::Rational(_) => "Q".to_string(),
            TwistScalar::NumberField(a) => {
                format!("Q(alpha) = Q[x]/({})", a.modulus())
            }
            TwistScalar::Function(_) => "Q(lambda), lambda transcendental".to_string(),
        }
    }
}
