//! Parsing of job descriptions from flags and batch files.

use std::fs;
use std::str::FromStr;

use mnk_core::{Matrix, Rational, TwistSpec};
use num_bigint::BigInt;
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Compute,
    Novikov,
    Oracle,
    VerifyLcs,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(CliError::User(format!("unknown format `{other}`"))),
        }
    }
}

pub const DEFAULT_ALPHA_DIGITS: u32 = 10;
pub const MAX_ALPHA_DIGITS: u32 = 200;

#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub command: Command,
    /// Absent only for `verify-lcs`.
    pub matrix: Option<Matrix<BigInt>>,
    pub twist: TwistSpec,
    pub format: Format,
    pub audit: bool,
    pub alpha_digits: u32,
    pub root_select: Option<usize>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec {
            command,
            matrix: None,
            twist: TwistSpec::Untwisted,
            format: Format::Json,
            audit: false,
            alpha_digits: DEFAULT_ALPHA_DIGITS,
            root_select: None,
        }
    }

    pub fn with_matrix(mut self, m: Matrix<BigInt>) -> Self {
        self.matrix = Some(m);
        self
    }

    pub fn with_twist(mut self, tw: TwistSpec) -> Self {
        self.twist = tw;
        self
    }

    pub fn matrix(&self) -> Result<&Matrix<BigInt>, CliError> {
        self.matrix
            .as_ref()
            .ok_or_else(|| CliError::User("--matrix is required".into()))
    }
}

/// Accepts `untwisted`, `rational:<p/q>`, `lee` and `transcendental`.
pub fn parse_twist(s: &str) -> Result<TwistSpec, CliError> {
    match s.trim() {
        "untwisted" => Ok(TwistSpec::Untwisted),
        "lee" => Ok(TwistSpec::LeeEigenvalue),
        "transcendental" => Ok(TwistSpec::Transcendental),
        other => {
            let Some(value) = other.strip_prefix("rational:") else {
                return Err(CliError::User(format!(
                    "unknown twist `{other}` (expected untwisted, rational:<p/q>, lee or transcendental)"
                )));
            };
            let l: Rational = value
                .trim()
                .parse()
                .map_err(|_| CliError::User(format!("bad rational weight `{value}`")))?;
            if l.is_zero() {
                return Err(CliError::User("rational weight must be nonzero".into()));
            }
            Ok(TwistSpec::RationalWeight(l))
        }
    }
}

/// Accepts inline JSON, `@path` to a JSON file, or `I<n>` for the identity.
pub fn parse_matrix(s: &str) -> Result<Matrix<BigInt>, CliError> {
    let s = s.trim();
    if let Some(path) = s.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::User(format!("cannot read {path}: {e}")))?;
        return parse_matrix(&text);
    }
    if let Some(n) = s.strip_prefix('I') {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::User(format!("bad identity shorthand `{s}`")))?;
        if n == 0 {
            return Err(CliError::User("I0 is not a valid monodromy".into()));
        }
        return Ok(Matrix::identity(n, &BigInt::from(0)));
    }
    let value: serde_json::Value =
        serde_json::from_str(s).map_err(|e| CliError::User(format!("matrix is not JSON: {e}")))?;
    matrix_from_json(&value)
}

pub(crate) fn matrix_from_json(value: &serde_json::Value) -> Result<Matrix<BigInt>, CliError> {
    if let Some(s) = value.as_str() {
        return parse_matrix(s);
    }
    let bad = || CliError::User("matrix must be a nonempty array of integer rows".into());
    let rows = value.as_array().filter(|r| !r.is_empty()).ok_or_else(bad)?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(bad)?;
        let mut parsed = Vec::with_capacity(row.len());
        for x in row {
            // integers beyond i64 arrive as strings
            let v = match x {
                serde_json::Value::Number(n) if n.is_i64() => BigInt::from(n.as_i64().unwrap()),
                serde_json::Value::String(s) => s
                    .parse()
                    .map_err(|_| CliError::User(format!("non-integer entry `{s}`")))?,
                other => return Err(CliError::User(format!("non-integer entry `{other}`"))),
            };
            parsed.push(v);
        }
        out.push(parsed);
    }
    let m = Matrix::from_rows(out).map_err(|e| CliError::User(e.to_string()))?;
    if !m.is_square() {
        return Err(CliError::User(format!(
            "monodromy must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

/// One entry of a batch file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BatchEntry {
    command: Command,
    #[serde(default)]
    matrix: Option<serde_json::Value>,
    #[serde(default)]
    twist: Option<String>,
    #[serde(default)]
    audit: bool,
    #[serde(default)]
    alpha_digits: Option<u32>,
    #[serde(default)]
    root_select: Option<usize>,
}

/// A batch file is a JSON array of job objects, e.g.
/// `[{"command": "compute", "matrix": "I3", "twist": "untwisted"}]`.
pub fn parse_batch(text: &str, format: Format) -> Result<Vec<JobSpec>, CliError> {
    let entries: Vec<BatchEntry> =
        serde_json::from_str(text).map_err(|e| CliError::User(format!("bad batch file: {e}")))?;
    entries
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            let ctx = |err: CliError| CliError::User(format!("job {i}: {}", err.message()));
            let matrix = e
                .matrix
                .as_ref()
                .map(matrix_from_json)
                .transpose()
                .map_err(ctx)?;
            let twist = match &e.twist {
                Some(t) => parse_twist(t).map_err(ctx)?,
                None => TwistSpec::Untwisted,
            };
            Ok(JobSpec {
                command: e.command,
                matrix,
                twist,
                format,
                audit: e.audit,
                alpha_digits: e.alpha_digits.unwrap_or(DEFAULT_ALPHA_DIGITS),
                root_select: e.root_select,
            })
        })
        .collect()
}
