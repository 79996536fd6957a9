//! Exact differential forms on the `S⁰` chart with coordinates
//! `(x, y, w₁, w₂)`, `w₂ > 0`, and the twisted operators of the
//! locally conformally Kähler structure on it.
//!
//! Coefficients depend on `w₂` only and are Laurent polynomials in
//! `u = w₂^{1/2}`, which is the smallest ring holding the orthonormal coframe
//! `e₁ = dw₁/w₂, e₂ = dw₂/w₂, e₃ = u·dx, e₄ = u·dy`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Coframe bit masks, in the order `dx, dy, dw₁, dw₂`.
pub const DX: u8 = 0b0001;
pub const DY: u8 = 0b0010;
pub const DW1: u8 = 0b0100;
pub const DW2: u8 = 0b1000;
const ALL: u8 = 0b1111;
const NAMES: [&str; 4] = ["dx", "dy", "dw1", "dw2"];

/// Exponent of `u` in `dxᵢ = u^{SCALE[i]} · fᵢ` where `f = (e₃, e₄, e₁, e₂)`
/// is the orthonormal coframe listed in coordinate order. The orientation
/// `e₁∧e₂∧e₃∧e₄` equals `f₀∧f₁∧f₂∧f₃`.
const SCALE: [i64; 4] = [-1, -1, 2, 2];

/// `u^k`.
pub fn u_pow(k: i64) -> LaurentPoly {
    LaurentPoly::monomial(Rational::one(), k)
}

/// `w₂^k = u^{2k}`.
pub fn w2_pow(k: i64) -> LaurentPoly {
    u_pow(2 * k)
}

/// Sign of `dx_a ∧ dx_b` relative to `dx_{a∪b}` (0 when they overlap).
fn merge_sign(a: u8, b: u8) -> i64 {
    if a & b != 0 {
        return 0;
    }
    let mut swaps = 0;
    for i in 0..4 {
        if a & (1 << i) != 0 {
            // b-indices below i must move past this a-index
            swaps += (b & ((1 << i) - 1)).count_ones();
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DifferentialForm {
    degree: usize,
    terms: BTreeMap<u8, LaurentPoly>,
}

impl DifferentialForm {
    pub fn zero(degree: usize) -> Self {
        DifferentialForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · dx_mask`.
    pub fn monomial(mask: u8, coeff: LaurentPoly) -> Self {
        assert!(mask <= ALL, "coframe mask out of range");
        let mut f = DifferentialForm::zero(mask.count_ones() as usize);
        f.add_term(mask, coeff);
        f
    }

    pub fn function(coeff: LaurentPoly) -> Self {
        DifferentialForm::monomial(0, coeff)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u8, &LaurentPoly)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, mask: u8) -> LaurentPoly {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mask: u8, c: LaurentPoly) {
        debug_assert_eq!(mask.count_ones() as usize, self.degree);
        let sum = self.coeff(mask) + c;
        if sum.is_zero() {
            self.terms.remove(&mask);
        } else {
            self.terms.insert(mask, sum);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = DifferentialForm::zero(self.degree);
        for (m, a) in self.terms() {
            out.add_term(m, a * c);
        }
        out
    }

    pub fn scale_rational(&self, c: Rational) -> Self {
        self.scale(&LaurentPoly::constant(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "adding forms of different degree"
        );
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_rational(-Rational::one()))
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", c.display_with("u"))?;
            let names: Vec<&str> = (0..4)
                .filter(|b| m & (1 << b) != 0)
                .map(|b| NAMES[b])
                .collect();
            if !names.is_empty() {
                write!(f, " {}", names.join("^"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form<{}>({self})", self.degree)
    }
}

pub fn wedge(a: &DifferentialForm, b: &DifferentialForm) -> Result<DifferentialForm> {
    let degree = a.degree + b.degree;
    if degree > 4 {
        return Err(Error::DegreeOverflow(degree));
    }
    let mut out = DifferentialForm::zero(degree);
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let s = merge_sign(ma, mb);
            if s != 0 {
                out.add_term(ma | mb, (ca * cb).scale(&Rational::from(s)));
            }
        }
    }
    Ok(out)
}

/// `∂f/∂w₂ = (1/(2u)) ∂f/∂u`.
fn d_dw2(f: &LaurentPoly) -> LaurentPoly {
    f.derivative().shift(-1).scale(&Rational::new(1, 2))
}

/// Exterior derivative; only `w₂`-dependence contributes.
pub fn exterior_d(a: &DifferentialForm) -> DifferentialForm {
    if a.degree == 4 {
        return DifferentialForm::zero(4);
    }
    let dw2 = DifferentialForm::monomial(DW2, LaurentPoly::one());
    let mut out = DifferentialForm::zero(a.degree + 1);
    for (m, c) in a.terms() {
        let term = DifferentialForm::monomial(m, LaurentPoly::one());
        let piece = wedge(&dw2, &term).expect("degree checked").scale(&d_dw2(c));
        out = out.add(&piece);
    }
    out
}

fn twisted_d(a: &DifferentialForm, theta: &DifferentialForm) -> DifferentialForm {
    let wedge_part = if a.degree == 4 {
        DifferentialForm::zero(4)
    } else {
        wedge(theta, a).expect("degree checked")
    };
    exterior_d(a).sub(&wedge_part)
}

fn check_closed(theta: &DifferentialForm) -> Result<()> {
    if theta.degree != 1 || !exterior_d(theta).is_zero() {
        return Err(Error::ThetaNotClosed);
    }
    Ok(())
}

/// `d_θ a = da − θ ∧ a`.
pub fn d_theta(a: &DifferentialForm, theta: &DifferentialForm) -> Result<DifferentialForm> {
    check_closed(theta)?;
    Ok(twisted_d(a, theta))
}

/// Hodge star of `g₁ = (dw₁² + dw₂²)/w₂² + w₂(dx² + dy²)`, orientation
/// `e₁∧e₂∧e₃∧e₄`.
pub fn hodge_star(a: &DifferentialForm) -> DifferentialForm {
    let mut out = DifferentialForm::zero(4 - a.degree);
    for (m, c) in a.terms() {
        let comp = ALL ^ m;
        let exp: i64 = (0..4)
            .map(|i| {
                if m & (1 << i) != 0 {
                    SCALE[i]
                } else {
                    -SCALE[i]
                }
            })
            .sum();
        let sign = merge_sign(m, comp);
        out.add_term(comp, (c * &u_pow(exp)).scale(&Rational::from(sign)));
    }
    out
}

/// `δ_θ = −∗ d_{−θ} ∗`.
pub fn delta_theta(a: &DifferentialForm, theta: &DifferentialForm) -> Result<DifferentialForm> {
    check_closed(theta)?;
    let neg = theta.scale_rational(-Rational::one());
    if a.degree == 0 {
        return Ok(DifferentialForm::zero(0));
    }
    Ok(hodge_star(&twisted_d(&hodge_star(a), &neg)).scale_rational(-Rational::one()))
}

/// `Δ_θ = δ_θ d_θ + d_θ δ_θ`.
pub fn laplacian_theta(a: &DifferentialForm, theta: &DifferentialForm) -> Result<DifferentialForm> {
    let first = if a.degree < 4 {
        delta_theta(&d_theta(a, theta)?, theta)?
    } else {
        DifferentialForm::zero(4)
    };
    let second = if a.degree > 0 {
        d_theta(&delta_theta(a, theta)?, theta)?
    } else {
        DifferentialForm::zero(0)
    };
    Ok(first.add(&second))
}

/// The Riemannian volume form `e₁∧e₂∧e₃∧e₄ = w₂⁻¹ dx∧dy∧dw₁∧dw₂`.
pub fn dvol() -> DifferentialForm {
    hodge_star(&DifferentialForm::function(LaurentPoly::one()))
}

/// Lee form, fundamental form and its pieces on the `S⁰` chart.
#[derive(Clone, Debug, PartialEq)]
pub struct LcsData {
    /// `θ = dw₂/w₂`.
    pub theta: DifferentialForm,
    pub omega: DifferentialForm,
    pub omega1: DifferentialForm,
    pub omega2: DifferentialForm,
    /// Primitive with `ω₁ = d_θ η`.
    pub eta: DifferentialForm,
    /// Factor applied to the forms as written in complex coordinates.
    pub normalization: Rational,
}

impl LcsData {
    /// The forms expanded from `Ω₁ = −i dw∧dw̄/w₂²`, `Ω₂ = −i w₂ dz∧dz̄`,
    /// `η = −dw₁/w₂`:
    /// `ω₁ = −2 dw₁∧dw₂/w₂²`, `ω₂ = −2 w₂ dx∧dy`.
    pub fn as_written() -> Self {
        let omega1 = DifferentialForm::monomial(DW1 | DW2, w2_pow(-2).scale(&Rational::from(-2)));
        let omega2 = DifferentialForm::monomial(DX | DY, w2_pow(1).scale(&Rational::from(-2)));
        LcsData {
            theta: DifferentialForm::monomial(DW2, w2_pow(-1)),
            omega: omega1.add(&omega2),
            omega1,
            omega2,
            eta: DifferentialForm::monomial(DW1, w2_pow(-1).scale(&Rational::from(-1))),
            normalization: Rational::one(),
        }
    }

    /// Rescaled so that `ω(X, Y) = g₁(JX, Y)` with `J∂x = ∂y`, `J∂w₁ = ∂w₂`:
    /// `ω = e₁∧e₂ + e₃∧e₄`, and then `dvol = ω²/2`.
    pub fn normalized() -> Self {
        LcsData::as_written().rescaled(Rational::new(-1, 2))
    }

    /// Multiplies `ω`, `ω₁`, `ω₂` and `η` by `c`.
    pub fn rescaled(&self, c: Rational) -> Self {
        LcsData {
            theta: self.theta.clone(),
            omega: self.omega.scale_rational(c.clone()),
            omega1: self.omega1.scale_rational(c.clone()),
            omega2: self.omega2.scale_rational(c.clone()),
            eta: self.eta.scale_rational(c.clone()),
            normalization: &self.normalization * &c,
        }
    }
}

/// What a check expects of its witness form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Zero,
    NonZero,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub expect: Expect,
    /// `lhs − rhs` for equalities, the form itself for nondegeneracy.
    pub witness: DifferentialForm,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LcsReport {
    pub normalization: Rational,
    pub checks: Vec<IdentityCheck>,
}

impl LcsReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs the identity battery on the normalized Tricerri data.
pub fn verify_tricerri() -> LcsReport {
    verify_lcs(&LcsData::normalized())
}

/// Runs the identity battery on arbitrary data (used for negative controls).
pub fn verify_lcs(data: &LcsData) -> LcsReport {
    let LcsData {
        theta,
        omega,
        omega1,
        omega2,
        eta,
        ..
    } = data;
    let w = |a: &DifferentialForm, b: &DifferentialForm| wedge(a, b).expect("degree within 4");
    let neg = theta.scale_rational(-Rational::one());
    let delta = |a: &DifferentialForm| {
        hodge_star(&twisted_d(&hodge_star(a), &neg)).scale_rational(-Rational::one())
    };
    let lap = |a: &DifferentialForm| {
        let first = if a.degree < 4 {
            delta(&twisted_d(a, theta))
        } else {
            DifferentialForm::zero(4)
        };
        first.add(&twisted_d(&delta(a), theta))
    };
    let theta_omega = w(theta, omega);
    let omega_sq = w(omega, omega);

    let mut checks = Vec::new();
    let mut push = |name, expect, witness: DifferentialForm| {
        let passed = match expect {
            Expect::Zero => witness.is_zero(),
            Expect::NonZero => !witness.is_zero(),
        };
        checks.push(IdentityCheck {
            name,
            expect,
            witness,
            passed,
        });
    };
    push(
        "d omega = theta ^ omega",
        Expect::Zero,
        exterior_d(omega).sub(&theta_omega),
    );
    push("d theta = 0", Expect::Zero, exterior_d(theta));
    push("omega ^ omega != 0", Expect::NonZero, omega_sq.clone());
    push(
        "omega1 = d_theta eta",
        Expect::Zero,
        omega1.sub(&twisted_d(eta, theta)),
    );
    push("theta ^ omega1 = 0", Expect::Zero, w(theta, omega1));
    push("d omega1 = 0", Expect::Zero, exterior_d(omega1));
    push("d_theta omega2 = 0", Expect::Zero, twisted_d(omega2, theta));
    push("delta_theta omega2 = 0", Expect::Zero, delta(omega2));
    push(
        "Delta_theta (theta ^ omega) = 0",
        Expect::Zero,
        lap(&theta_omega),
    );
    push(
        "dvol = omega^2 / 2",
        Expect::Zero,
        dvol().sub(&omega_sq.scale_rational(Rational::new(1, 2))),
    );
    push(
        "*omega2 = omega1",
        Expect::Zero,
        hodge_star(omega2).sub(omega1),
    );
    LcsReport {
        normalization: data.normalization.clone(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> DifferentialForm {
        DifferentialForm::monomial(DW2, w2_pow(-1))
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn wedge_basics() {
        let dx = DifferentialForm::monomial(DX, one());
        let dy = DifferentialForm::monomial(DY, one());
        assert_eq!(
            wedge(&dx, &dy).unwrap(),
            DifferentialForm::monomial(DX | DY, one())
        );
        assert_eq!(
            wedge(&dy, &dx).unwrap(),
            DifferentialForm::monomial(DX | DY, -one())
        );
        assert!(wedge(&theta(), &theta()).unwrap().is_zero());
        let top = dvol();
        assert_eq!(wedge(&top, &dx).unwrap_err(), Error::DegreeOverflow(5));
    }

    #[test]
    fn derivative_of_dw1_over_w2() {
        // d(dw₁/w₂) = −w₂⁻² dw₂∧dw₁ = w₂⁻² dw₁∧dw₂
        let f = DifferentialForm::monomial(DW1, w2_pow(-1));
        assert_eq!(
            exterior_d(&f),
            DifferentialForm::monomial(DW1 | DW2, w2_pow(-2))
        );
        assert!(
            exterior_d(&DifferentialForm::function(LaurentPoly::constant(
                Rational::from(7)
            )))
            .is_zero()
        );
    }

    #[test]
    fn written_forms_relations() {
        let d = LcsData::as_written();
        assert_eq!(twisted_d(&d.eta, &d.theta), d.omega1);
        assert!(exterior_d(&d.omega1).is_zero());
        assert!(d_theta(&d.omega2, &d.theta).unwrap().is_zero());
        let tw = wedge(&d.theta, &d.omega).unwrap();
        assert!(d_theta(&tw, &d.theta).unwrap().is_zero());
    }

    #[test]
    fn star_examples() {
        let n = LcsData::normalized();
        assert_eq!(hodge_star(&n.omega2), n.omega1);
        // *1 = e₁∧e₂∧e₃∧e₄ = w₂⁻¹ dx∧dy∧dw₁∧dw₂
        assert_eq!(dvol(), DifferentialForm::monomial(ALL, w2_pow(-1)));
        // *e₁ = e₂∧e₃∧e₄
        let e1 = DifferentialForm::monomial(DW1, w2_pow(-1));
        let e234 = DifferentialForm::monomial(DW2 | DX | DY, w2_pow(-1) * w2_pow(1));
        assert_eq!(hodge_star(&e1), e234);
    }

    #[test]
    fn omega2_is_harmonic() {
        let n = LcsData::normalized();
        assert!(delta_theta(&n.omega2, &n.theta).unwrap().is_zero());
        assert!(laplacian_theta(&n.omega2, &n.theta).unwrap().is_zero());
        let tw = wedge(&n.theta, &n.omega).unwrap();
        assert!(laplacian_theta(&tw, &n.theta).unwrap().is_zero());
    }

    #[test]
    fn non_closed_theta_rejected() {
        let bad = DifferentialForm::monomial(DX, w2_pow(1));
        assert_eq!(d_theta(&theta(), &bad).unwrap_err(), Error::ThetaNotClosed);
    }

    #[test]
    fn battery_passes() {
        let r = verify_tricerri();
        assert_eq!(r.checks.len(), 11);
        for c in &r.checks {
            assert!(c.passed, "{} failed: {}", c.name, c.witness);
        }
        assert_eq!(r.normalization, Rational::new(-1, 2));
    }

    #[test]
    fn written_normalization_misses_only_the_volume_identity() {
        let r = verify_lcs(&LcsData::as_written());
        let failed: Vec<_> = r
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        assert_eq!(failed, vec!["dvol = omega^2 / 2"]);
    }

    #[test]
    fn negative_controls() {
        let mut doubled = LcsData::normalized();
        doubled.theta = doubled.theta.scale_rational(Rational::from(2));
        let r = verify_lcs(&doubled);
        let c = r.check("d omega = theta ^ omega").unwrap();
        assert!(!c.passed && !c.witness.is_zero());

        let mut degenerate = LcsData::normalized();
        degenerate.omega = degenerate.omega1.clone();
        let r = verify_lcs(&degenerate);
        assert!(!r.check("omega ^ omega != 0").unwrap().passed);
    }
}
