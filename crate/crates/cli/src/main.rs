mod commands;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use report::{Outcome, RunReport, EXIT_REFUTED, EXIT_USAGE};

/// Exact checks on flag-transitive 2-designs with block size seven.
#[derive(Debug, Parser)]
#[command(name = "flagsieve", version)]
struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true, conflicts_with = "quiet")]
    json: bool,
    /// Print nothing; only the exit code reports the verdict.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// For `construct`, the directory receiving the files (default `.`);
    /// otherwise a file that receives a copy of the report.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Derive r and b from (v, k, λ) and check feasibility.
    Params { v: u64, k: u64, lambda: u64 },
    /// Run one of the elimination sieves.
    Sieve {
        name: SieveName,
        /// Multiply the default ranges by this factor.
        #[arg(long, default_value_t = 1, value_name = "FACTOR")]
        extend: u64,
        /// Group for eliminate-253, `A23` or `S23`; both when omitted.
        #[arg(long, value_name = "A|S<n>")]
        group: Option<String>,
    },
    /// Build a design, write `.design` and `.group` files and verify them.
    Construct { which: Which },
    /// Check that a design is a 2-design and the group acts flag-transitively.
    Verify { design: PathBuf, group: PathBuf },
    /// Orbit lengths of a point stabilizer of a transitive group.
    Subdegrees {
        group: PathBuf,
        #[arg(long, default_value_t = 0)]
        point: usize,
    },
    /// Primitivity of a transitive group, with a block system if imprimitive.
    Primitivity { group: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SieveName {
    Intransitive,
    Imprimitive,
    Product,
    Diagonal,
    Table1,
    #[value(name = "eliminate-253")]
    Eliminate253,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Pg32,
    C55,
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Params { v, k, lambda } => commands::params(*v, *k, *lambda),
        Command::Sieve { name, extend, group } => commands::sieve(*name, *extend, group.as_deref()),
        Command::Construct { which } => {
            let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
            commands::construct(*which, &dir)
        }
        Command::Verify { design, group } => commands::verify(design, group),
        Command::Subdegrees { group, point } => commands::subdegrees_cmd(group, *point),
        Command::Primitivity { group } => commands::primitivity(group),
    }
}

/// 2 for bad invocations, unreadable or malformed input; 1 otherwise.
fn error_exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<commands::Usage>().is_some() || err.downcast_ref::<std::io::Error>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<flagsieve::Error>() {
        Some(
            flagsieve::Error::Parse { .. }
            | flagsieve::Error::Io(_)
            | flagsieve::Error::InvalidInput(_)
            | flagsieve::Error::DegreeMismatch { .. }
            | flagsieve::Error::Capacity { .. }
            | flagsieve::Error::SearchCap { .. },
        ) => EXIT_USAGE,
        Some(_) => EXIT_REFUTED,
        None => EXIT_USAGE,
    }
}

fn emit(cli: &Cli, rendered: &str, artifacts_out: bool) -> Result<()> {
    if artifacts_out && !rendered.is_empty() {
        if let Some(path) = &cli.out {
            fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    if !cli.quiet {
        print!("{rendered}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let result = dispatch(&cli);
    let micros = start.elapsed().as_micros() as u64;
    // `--out` names a report file everywhere except `construct`.
    let report_to_file = !matches!(cli.command, Command::Construct { .. });

    let (rendered, code) = match result {
        Ok(mut outcome) => {
            if report_to_file {
                if let Some(path) = &cli.out {
                    outcome.artifacts.push(path.display().to_string());
                }
            }
            let report = RunReport::from_outcome(command, micros, &outcome);
            let rendered = if cli.json { report.to_json() } else { outcome.text };
            (rendered, report.exit_code)
        }
        Err(err) => {
            let code = error_exit_code(&err);
            eprintln!("error: {err:#}");
            let report = RunReport::from_error(command, micros, code, format!("{err:#}"));
            (if cli.json { report.to_json() } else { String::new() }, code)
        }
    };
    if let Err(err) = emit(&cli, &rendered, report_to_file) {
        eprintln!("error: {err:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(code)
}
