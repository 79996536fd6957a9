use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mnk_cli::{
    execute, parse_batch, parse_matrix, parse_twist, run_batch, CliError, Command, Format, JobSpec,
};

#[derive(Parser)]
#[command(
    name = "mnk",
    version,
    about = "Morse-Novikov cohomology of torus mapping tori"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Twisted cohomology dims of T^n x_A S^1.
    Compute(JobArgs),
    /// Novikov Betti numbers and torsion over Q[t, t^-1].
    Novikov(JobArgs),
    /// Cross-check the closed form against the cellular complex.
    Oracle(JobArgs),
    /// Symbolic identity battery for the LCS structure on the Inoue surface.
    VerifyLcs {
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run a JSON array of jobs concurrently.
    Batch {
        file: PathBuf,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

#[derive(Args)]
struct JobArgs {
    /// Inline JSON rows, @file, or I<n>.
    #[arg(long)]
    matrix: String,
    /// untwisted | rational:<p/q> | lee | transcendental
    #[arg(long, default_value = "untwisted")]
    twist: String,
    /// json | markdown
    #[arg(long, default_value = "json")]
    format: String,
    /// Include the gamma blocks.
    #[arg(long)]
    audit: bool,
    #[arg(long, default_value_t = mnk_cli::job::DEFAULT_ALPHA_DIGITS)]
    alpha_digits: u32,
    /// Index into the real eigenvalues > 1, largest first.
    #[arg(long)]
    root_select: Option<usize>,
}

impl JobArgs {
    fn into_job(self, command: Command) -> Result<JobSpec, CliError> {
        Ok(JobSpec {
            command,
            matrix: Some(parse_matrix(&self.matrix)?),
            twist: parse_twist(&self.twist)?,
            format: self.format.parse()?,
            audit: self.audit,
            alpha_digits: self.alpha_digits,
            root_select: self.root_select,
        })
    }
}

fn dispatch(cmd: Cmd) -> Result<(String, i32), CliError> {
    let job = match cmd {
        Cmd::Compute(a) => a.into_job(Command::Compute)?,
        Cmd::Novikov(a) => a.into_job(Command::Novikov)?,
        Cmd::Oracle(a) => a.into_job(Command::Oracle)?,
        Cmd::VerifyLcs { format } => JobSpec {
            format: format.parse()?,
            ..JobSpec::new(Command::VerifyLcs)
        },
        Cmd::Batch { file, format } => {
            let format: Format = format.parse()?;
            let text = fs::read_to_string(&file)
                .map_err(|e| CliError::User(format!("cannot read {}: {e}", file.display())))?;
            let jobs = parse_batch(&text, format)?;
            return Ok(run_batch(&jobs, format));
        }
    };
    let out = execute(&job)?;
    Ok((out.document.render(job.format), out.code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match dispatch(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.code() as u8);
        }
    };
    print!("{text}");
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
