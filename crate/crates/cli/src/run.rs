//! Executes jobs and maps failures onto exit codes.

use std::thread;

use mnk_core::{
    build_mapping_torus_complex, complex_cohomology, gamma_blocks, novikov_invariants,
    twisted_cohomology, vanishing_check, verify_tricerri, MappingTorus,
};
use serde_json::json;

use crate::job::{Command, Format, JobSpec, MAX_ALPHA_DIGITS};
use crate::report::{to_json, CohomologyDoc, Document, LcsDoc, NovikovDoc, OracleDoc, TwistDoc};
use crate::{CliError, EXIT_INVARIANT, EXIT_OK};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub document: Document,
    /// `EXIT_OK`, or `EXIT_INVARIANT` when a check inside the document failed.
    pub code: i32,
}

impl Outcome {
    fn new(document: Document, ok: bool) -> Self {
        Outcome {
            document,
            code: if ok { EXIT_OK } else { EXIT_INVARIANT },
        }
    }
}

fn torus(job: &JobSpec) -> Result<MappingTorus, CliError> {
    let m = job.matrix()?.clone();
    Ok(MappingTorus::build_with_root(m, job.root_select)?)
}

pub fn execute(job: &JobSpec) -> Result<Outcome, CliError> {
    if job.alpha_digits > MAX_ALPHA_DIGITS {
        return Err(CliError::User(format!(
            "--alpha-digits is capped at {MAX_ALPHA_DIGITS}"
        )));
    }
    match job.command {
        Command::Compute => compute(job),
        Command::Novikov => novikov(job),
        Command::Oracle => oracle(job),
        Command::VerifyLcs => {
            let doc = LcsDoc::from(&verify_tricerri());
            let ok = doc.passed;
            Ok(Outcome::new(Document::Lcs(doc), ok))
        }
    }
}

fn compute(job: &JobSpec) -> Result<Outcome, CliError> {
    let mt = torus(job)?;
    let report = twisted_cohomology(&mt, &job.twist)?;
    let check = vanishing_check(&report);
    let blocks = if job.audit {
        Some(gamma_blocks(&mt, &job.twist)?)
    } else {
        None
    };
    let mut doc = CohomologyDoc::new(&report, job.alpha_digits, blocks.as_deref());
    let mut ok = check.passed;
    doc.warnings.extend(check.violations);
    for g in blocks.iter().flatten() {
        if !g.rank_matches_column_reduction() {
            ok = false;
            doc.warnings.push(format!(
                "gamma_{}: rank {} != 2*C(n,k) - nullity {}",
                g.degree,
                g.rank(),
                g.nullity()
            ));
        }
    }
    Ok(Outcome::new(Document::Cohomology(doc), ok))
}

fn novikov(job: &JobSpec) -> Result<Outcome, CliError> {
    let mt = torus(job)?;
    let nov = novikov_invariants(&mt)?;
    let doc = NovikovDoc::new(&nov, mt.warnings());
    let ok = doc.euler == 0;
    Ok(Outcome::new(Document::Novikov(doc), ok))
}

fn oracle(job: &JobSpec) -> Result<Outcome, CliError> {
    let mt = torus(job)?;
    let engine = twisted_cohomology(&mt, &job.twist)?.dims;
    let oracle = complex_cohomology(&build_mapping_torus_complex(&mt, &job.twist)?)?;
    let mut violations = Vec::new();
    if engine != oracle {
        violations.push(format!("oracle {oracle:?} != engine {engine:?}"));
    }
    let doc = OracleDoc {
        passed: violations.is_empty(),
        twist: TwistDoc::from(&job.twist),
        engine,
        oracle,
        violations,
    };
    let ok = doc.passed;
    Ok(Outcome::new(Document::Oracle(doc), ok))
}

/// Runs independent jobs on scoped threads; results keep the input order.
pub fn run_batch(jobs: &[JobSpec], format: Format) -> (String, i32) {
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(jobs.len().max(1));
    let mut results: Vec<Option<Result<Outcome, CliError>>> = vec![None; jobs.len()];
    thread::scope(|s| {
        for (w, slot_chunk) in results
            .chunks_mut(jobs.len().div_ceil(workers).max(1))
            .enumerate()
        {
            let start = w * jobs.len().div_ceil(workers).max(1);
            s.spawn(move || {
                for (i, slot) in slot_chunk.iter_mut().enumerate() {
                    *slot = Some(execute(&jobs[start + i]));
                }
            });
        }
    });
    let results: Vec<Result<Outcome, CliError>> = results
        .into_iter()
        .map(|r| r.expect("every job ran"))
        .collect();
    let code = results
        .iter()
        .map(|r| match r {
            Ok(o) => o.code,
            Err(e) => e.code(),
        })
        .max()
        .unwrap_or(EXIT_OK);
    let text = match format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = results
                .iter()
                .enumerate()
                .map(|(i, r)| match r {
                    Ok(o) => {
                        json!({"job": i, "exit_code": o.code, "report": o.document.to_value()})
                    }
                    Err(e) => json!({"job": i, "exit_code": e.code(), "error": e.message()}),
                })
                .collect();
            to_json(&entries)
        }
        Format::Markdown => {
            let mut out = String::new();
            for (i, r) in results.iter().enumerate() {
                out.push_str(&format!("<!-- job {i} -->\n"));
                match r {
                    Ok(o) => out.push_str(&o.document.render(Format::Markdown)),
                    Err(e) => out.push_str(&format!("error: {}\n", e.message())),
                }
                out.push('\n');
            }
            out
        }
    };
    (text, code)
}
