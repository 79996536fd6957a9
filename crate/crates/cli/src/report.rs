//! Report documents and their JSON and Markdown renderings.

use std::fmt::Write as _;

use mnk_core::forms::Expect;
use mnk_core::{CohomologyReport, GammaMap, LcsReport, NovikovInvariants, TwistSpec};
use serde::{Deserialize, Serialize};

use crate::job::Format;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistDoc {
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

impl From<&TwistSpec> for TwistDoc {
    fn from(tw: &TwistSpec) -> Self {
        let (mode, lambda) = match tw {
            TwistSpec::Untwisted => ("untwisted", Some("1".to_string())),
            TwistSpec::RationalWeight(l) => ("rational", Some(l.to_string())),
            TwistSpec::LeeEigenvalue => ("lee", Some("alpha".to_string())),
            TwistSpec::Transcendental => ("transcendental", None),
        };
        TwistDoc {
            mode: mode.to_string(),
            lambda,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodsDoc {
    pub free_generators: usize,
    pub generator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDoc {
    pub degree: usize,
    pub size: usize,
    pub rank: usize,
    pub nullity: usize,
    pub block: Vec<Vec<String>>,
    /// `I − λ·M_k`.
    pub control: Vec<Vec<String>>,
    pub control_rank: usize,
}

impl From<&GammaMap> for GammaDoc {
    fn from(g: &GammaMap) -> Self {
        GammaDoc {
            degree: g.degree,
            size: g.size(),
            rank: g.rank(),
            nullity: g.nullity(),
            block: g.block.to_string_rows(),
            control: g.control.to_string_rows(),
            control_rank: g.control.rows() - g.nullity(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyDoc {
    pub dims: Vec<usize>,
    pub nullities: Vec<usize>,
    pub euler: i64,
    pub twist: TwistDoc,
    pub field: String,
    pub alpha_approx: Option<String>,
    pub warnings: Vec<String>,
    pub periods: PeriodsDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<Vec<GammaDoc>>,
}

impl CohomologyDoc {
    pub fn new(r: &CohomologyReport, alpha_digits: u32, audit: Option<&[GammaMap]>) -> Self {
        CohomologyDoc {
            dims: r.dims.clone(),
            nullities: r.nullities.clone(),
            euler: r.euler,
            twist: TwistDoc::from(&r.twist),
            field: r.field.clone(),
            alpha_approx: r.alpha.as_ref().map(|a| a.to_decimal(alpha_digits)),
            warnings: r.warnings.clone(),
            periods: PeriodsDoc {
                free_generators: r.free_generators,
                generator: r.period_generator.clone(),
            },
            audit: audit.map(|gs| gs.iter().map(GammaDoc::from).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NovikovDoc {
    pub betti: Vec<usize>,
    /// Non-unit elementary divisors per degree, as polynomials in `t`.
    pub torsion: Vec<Vec<String>>,
    pub euler: i64,
    /// `det(t·M_k − I)` for `k = 0..=n`.
    pub wang_determinants: Vec<String>,
    pub period_generator: String,
    pub coefficients: String,
    pub warnings: Vec<String>,
}

impl NovikovDoc {
    pub fn new(nov: &NovikovInvariants, warnings: &[String]) -> Self {
        NovikovDoc {
            betti: nov.betti.clone(),
            torsion: nov
                .torsion
                .iter()
                .map(|ds| ds.iter().map(|d| d.display_with("t").to_string()).collect())
                .collect(),
            euler: nov.euler(),
            wang_determinants: nov.wang.iter().map(|w| w.det().to_string()).collect(),
            period_generator: nov.period_generator.clone(),
            coefficients: nov.coefficients.clone(),
            warnings: warnings.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub passed: bool,
    pub twist: TwistDoc,
    pub engine: Vec<usize>,
    pub oracle: Vec<usize>,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityDoc {
    pub name: String,
    pub expect: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcsDoc {
    pub passed: bool,
    pub normalization: String,
    pub checks: Vec<IdentityDoc>,
}

impl From<&LcsReport> for LcsDoc {
    fn from(r: &LcsReport) -> Self {
        LcsDoc {
            passed: r.all_passed(),
            normalization: r.normalization.to_string(),
            checks: r
                .checks
                .iter()
                .map(|c| IdentityDoc {
                    name: c.name.to_string(),
                    expect: match c.expect {
                        Expect::Zero => "zero",
                        Expect::NonZero => "nonzero",
                    }
                    .to_string(),
                    passed: c.passed,
                    witness: c.witness.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Cohomology(CohomologyDoc),
    Novikov(NovikovDoc),
    Oracle(OracleDoc),
    Lcs(LcsDoc),
}

impl Document {
    pub fn to_value(&self) -> serde_json::Value {
        let v = match self {
            Document::Cohomology(d) => serde_json::to_value(d),
            Document::Novikov(d) => serde_json::to_value(d),
            Document::Oracle(d) => serde_json::to_value(d),
            Document::Lcs(d) => serde_json::to_value(d),
        };
        v.expect("documents serialize")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(&self.to_value()),
            Format::Markdown => self.to_markdown(),
        }
    }

    fn to_markdown(&self) -> String {
        match self {
            Document::Cohomology(d) => cohomology_markdown(d),
            Document::Novikov(d) => novikov_markdown(d),
            Document::Oracle(d) => oracle_markdown(d),
            Document::Lcs(d) => lcs_markdown(d),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// `[a, b]` rows, one per line, padded to a common column width.
pub fn bracketed(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "[{}]", cells.join(", "));
    }
    out
}

fn list<T: ToString>(xs: &[T]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn twist_label(t: &TwistDoc) -> String {
    match &t.lambda {
        Some(l) if t.mode == "rational" => format!("rational (lambda = {l})"),
        _ => t.mode.clone(),
    }
}

fn cohomology_markdown(d: &CohomologyDoc) -> String {
    let mut s = String::from("# Twisted cohomology\n\n");
    let _ = writeln!(s, "- twist: {}", twist_label(&d.twist));
    let _ = writeln!(s, "- field: {}", d.field);
    if let Some(a) = &d.alpha_approx {
        let _ = writeln!(s, "- alpha ~ {a}");
    }
    let _ = writeln!(s, "- dims: {}", list(&d.dims));
    let _ = writeln!(s, "- nullities: {}", list(&d.nullities));
    let _ = writeln!(s, "- euler: {}", d.euler);
    let _ = writeln!(
        s,
        "- periods: rank {}, generator {}",
        d.periods.free_generators, d.periods.generator
    );
    s.push_str("\n| i | dim H^i |\n|---|---|\n");
    for (i, x) in d.dims.iter().enumerate() {
        let _ = writeln!(s, "| {i} | {x} |");
    }
    if let Some(blocks) = &d.audit {
        s.push_str("\n## Audit\n\nEntries over Q(alpha) are written in `a = alpha`.\n");
        for g in blocks {
            let _ = writeln!(
                s,
                "\n### gamma_{} ({}x{}, rank {})\n\n```\n{}```\n",
                g.degree,
                g.size,
                g.size,
                g.rank,
                bracketed(&g.block)
            );
            let _ = writeln!(
                s,
                "I - lambda*M_{} (rank {}, nullity {}):\n\n```\n{}```",
                g.degree,
                g.control_rank,
                g.nullity,
                bracketed(&g.control)
            );
        }
    }
    push_warnings(&mut s, &d.warnings);
    s
}

fn novikov_markdown(d: &NovikovDoc) -> String {
    let mut s = String::from("# Novikov homology\n\n");
    let _ = writeln!(s, "- coefficients: {}", d.coefficients);
    let _ = writeln!(s, "- periods: {}", d.period_generator);
    let _ = writeln!(s, "- betti: {}", list(&d.betti));
    let _ = writeln!(s, "- euler: {}", d.euler);
    s.push_str("\n| i | b_i | torsion |\n|---|---|---|\n");
    for (i, (b, t)) in d.betti.iter().zip(&d.torsion).enumerate() {
        let tors = if t.is_empty() {
            "-".to_string()
        } else {
            t.join(", ")
        };
        let _ = writeln!(s, "| {i} | {b} | {tors} |");
    }
    s.push_str("\n| k | det(t M_k - I) |\n|---|---|\n");
    for (k, det) in d.wang_determinants.iter().enumerate() {
        let _ = writeln!(s, "| {k} | {det} |");
    }
    push_warnings(&mut s, &d.warnings);
    s
}

fn oracle_markdown(d: &OracleDoc) -> String {
    let mut s = String::from("# Oracle cross-check\n\n");
    let _ = writeln!(s, "- twist: {}", twist_label(&d.twist));
    let _ = writeln!(s, "- engine: {}", list(&d.engine));
    let _ = writeln!(s, "- oracle: {}", list(&d.oracle));
    let _ = writeln!(
        s,
        "- result: {}",
        if d.passed { "agree" } else { "MISMATCH" }
    );
    push_warnings(&mut s, &d.violations);
    s
}

fn lcs_markdown(d: &LcsDoc) -> String {
    let mut s = String::from("# LCS identity battery\n\n");
    let _ = writeln!(s, "- normalization: {}", d.normalization);
    let _ = writeln!(
        s,
        "- result: {}\n",
        if d.passed { "all pass" } else { "FAIL" }
    );
    s.push_str("| identity | expect | result | witness |\n|---|---|---|---|\n");
    for c in &d.checks {
        let _ = writeln!(
            s,
            "| {} | {} | {} | `{}` |",
            c.name,
            c.expect,
            if c.passed { "pass" } else { "FAIL" },
            c.witness
        );
    }
    s
}

fn push_warnings(s: &mut String, warnings: &[String]) {
    if warnings.is_empty() {
        return;
    }
    s.push_str("\n## Warnings\n\n");
    for w in warnings {
        let _ = writeln!(s, "- {w}");
    }
}
