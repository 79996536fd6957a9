//! Front end for `mnk-core`: job parsing, report documents and execution.
//!
//! Exit codes: 0 ok, 2 user error, 3 invariant violation.

pub mod job;
pub mod report;
pub mod run;

pub use job::{parse_batch, parse_matrix, parse_twist, Command, Format, JobSpec};
pub use report::{CohomologyDoc, Document, LcsDoc, NovikovDoc, OracleDoc};
pub use run::{execute, run_batch, Outcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

/// JSON Schema for the `compute` report.
pub const COHOMOLOGY_SCHEMA: &str = include_str!("../schema/cohomology_report.schema.json");

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    User(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::User(_) => EXIT_USER,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }

    pub fn message(&self) -> String {
        self.to_string()
    }
}

impl From<mnk_core::Error> for CliError {
    fn from(e: mnk_core::Error) -> Self {
        use mnk_core::Error as E;
        match e {
            E::NonSquare { .. }
            | E::NotUnimodular(_)
            | E::ModeUnavailable(_)
            | E::DimensionMismatch(_)
            | E::MixedCoefficients => CliError::User(e.to_string()),
            other => CliError::Invariant(other.to_string()),
        }
    }
}
