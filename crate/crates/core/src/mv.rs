//! Twisted cohomology of `Tⁿ ×_A S¹` from the twisted Mayer–Vietoris (Wang)
//! sequence.
//!
//! Covering the base circle by two arcs, the sequence reduces to the maps
//! `γ_k(a, b) = (a − b, a − λ·M_k b)` on `Hᵏ(Tⁿ) ⊕ Hᵏ(Tⁿ)`. Adding the first
//! block column to the second leaves `[[I, 0], [I, I − λ·M_k]]`, so
//! `dim ker γ_k = ν_k := nullity(I − λ·M_k)` and
//! `dim Hⁱ_θ = ν_{i−1} + ν_i`.

use crate::arith::RealRootLabel;
use crate::error::{Error, Result};
use crate::linalg::{Elimination, FieldMatrix};
use crate::torus::{MappingTorus, TwistSpec};
use crate::CheckOutcome;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    /// Fiber dimension; the total space has dimension `n + 1`.
    pub n: usize,
    /// `dim Hⁱ_θ` for `i = 0..=n+1`.
    pub dims: Vec<usize>,
    /// `ν_k = nullity(I − λ·M_k)` for `k = 0..=n`.
    pub nullities: Vec<usize>,
    pub euler: i64,
    /// `det A = +1`.
    pub orientable: bool,
    pub twist: TwistSpec,
    pub field: String,
    pub alpha: Option<RealRootLabel>,
    /// Rank of the period group of `θ`.
    pub free_generators: usize,
    pub period_generator: String,
    pub warnings: Vec<String>,
}

impl CohomologyReport {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Assembles `dims[i] = ν_{i−1} + ν_i` with `ν_{−1} = ν_{n+1} = 0`.
pub fn dims_from_nullities(nullities: &[usize]) -> Vec<usize> {
    (0..=nullities.len())
        .map(|i| {
            let prev = if i > 0 { nullities[i - 1] } else { 0 };
            prev + nullities.get(i).copied().unwrap_or(0)
        })
        .collect()
}

pub fn euler_characteristic(dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

pub fn twisted_cohomology(mt: &MappingTorus, tw: &TwistSpec) -> Result<CohomologyReport> {
    let lambda = tw.scalar(mt)?;
    let maps = mt.induced_maps();
    let nullities: Vec<usize> = maps
        .maps
        .iter()
        .map(|m| lambda.one_minus_lambda(m).nullity(Elimination::Gauss))
        .collect();
    let dims = dims_from_nullities(&nullities);
    let alpha = match tw {
        TwistSpec::LeeEigenvalue => mt.alpha().cloned(),
        _ => None,
    };
    Ok(CohomologyReport {
        n: mt.n(),
        euler: euler_characteristic(&dims),
        orientable: num_traits::Signed::is_positive(mt.det()),
        dims,
        nullities,
        twist: tw.clone(),
        field: lambda.field_description(),
        alpha,
        free_generators: tw.free_generators(),
        period_generator: tw.period_generator(),
        warnings: mt.warnings().to_vec(),
    })
}

/// The degree-`k` map `γ` of the Mayer–Vietoris sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaMap {
    pub degree: usize,
    /// `[[I, −I], [I, −λ·M_k]]`.
    pub block: FieldMatrix,
    /// `I − λ·M_k`, the block controlling the rank.
    pub control: FieldMatrix,
}

impl GammaMap {
    pub fn rank(&self) -> usize {
        self.block.rank(Elimination::Gauss)
    }

    pub fn size(&self) -> usize {
        self.block.rows()
    }

    /// `ν_k`, read off the control block.
    pub fn nullity(&self) -> usize {
        self.control.nullity(Elimination::Gauss)
    }

    /// `rank γ = 2·C(n,k) − ν_k`.
    pub fn rank_matches_column_reduction(&self) -> bool {
        self.rank() == self.size() - self.nullity()
    }
}

pub fn gamma_matrix(mt: &MappingTorus, tw: &TwistSpec, k: usize) -> Result<GammaMap> {
    if k > mt.n() {
        return Err(Error::DegreeOutOfRange { k, n: mt.n() });
    }
    let lambda = tw.scalar(mt)?;
    let m = crate::linalg::exterior_power(mt.monodromy(), k)?;
    Ok(GammaMap {
        degree: k,
        block: lambda.gamma(&m),
        control: lambda.one_minus_lambda(&m),
    })
}

/// `γ_k` for every degree `k = 0..=n`.
pub fn gamma_blocks(mt: &MappingTorus, tw: &TwistSpec) -> Result<Vec<GammaMap>> {
    (0..=mt.n()).map(|k| gamma_matrix(mt, tw, k)).collect()
}

/// Checks `H⁰ = 0` when `θ` is not exact, `H^{n+1} = 0` as well when the
/// torus is orientable, the nullity identity, and vanishing Euler
/// characteristic. For `det A = −1` the top class survives at `λ = −1`.
pub fn vanishing_check(report: &CohomologyReport) -> CheckOutcome {
    let mut violations = Vec::new();
    let top = report.dims.len() - 1;
    if !report.twist.is_exact() {
        if report.dims[0] != 0 {
            violations.push(format!("H^0 = {} for a non-exact twist", report.dims[0]));
        }
        if report.orientable && report.dims[top] != 0 {
            violations.push(format!(
                "H^{top} = {} for a non-exact twist",
                report.dims[top]
            ));
        }
    }
    if report.euler != 0 {
        violations.push(format!("Euler characteristic {} != 0", report.euler));
    }
    if euler_characteristic(&report.dims) != report.euler {
        violations.push("recorded Euler characteristic disagrees with dims".to_string());
    }
    if dims_from_nullities(&report.nullities) != report.dims {
        violations.push("dims differ from nu_{i-1} + nu_i".to_string());
    }
    CheckOutcome::from_violations(violations)
}
