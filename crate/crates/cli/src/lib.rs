//! The `mwg` command line: analyze an element, classify a finite ring,
//! check a candidate inverse, or replay the built-in regression fixtures.
//!
//! Reports are JSON with a fixed key order. `--plain` renders a table
//! instead, and `--stable` drops the timing block so that identical inputs
//! give byte-identical output.

pub mod analyze;
pub mod check;
pub mod classify;
pub mod examples;
pub mod exit;
pub mod input;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use exit::{CliError, ExitStatus};

#[derive(Debug, Parser)]
#[command(name = "mwg", version, about = "Exact m-weak group inverses in rings with involution")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Drazin inverse and m-weak group inverse families of one element.
    Analyze(AnalyzeArgs),
    /// Proper, weak proper and idempotent-cancellation flags of a finite ring.
    Classify(ClassifyArgs),
    /// Replay the built-in fixtures, one PASS/FAIL line each.
    Examples(ExamplesArgs),
    /// Evaluate each defining equation for a candidate inverse.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct Format {
    /// Human-readable table instead of JSON.
    #[arg(long)]
    pub plain: bool,
    /// Single-line JSON.
    #[arg(long)]
    pub compact: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Ring description (JSON).
    #[arg(long)]
    pub ring: PathBuf,
    /// Element (JSON or compact text).
    #[arg(long)]
    pub element: PathBuf,
    /// Orders to solve for.
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    pub m: Vec<u32>,
    /// Include the group-EP decomposition.
    #[arg(long)]
    pub group_ep: bool,
    /// Omit timings.
    #[arg(long)]
    pub stable: bool,
    /// Largest Drazin index accepted by the finite-ring search.
    #[arg(long, default_value_t = 16)]
    pub max_k: u32,
    #[command(flatten)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub ring: PathBuf,
    /// Record every witness, not just the first per property.
    #[arg(long)]
    pub verbose: bool,
    #[command(flatten)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExamplesArgs {
    /// Only fixtures whose name contains this text.
    #[arg(long)]
    pub filter: Option<String>,
    /// Compare the named fixture against a wrong expectation.
    #[arg(long, hide = true)]
    pub corrupt: Option<String>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub ring: PathBuf,
    #[arg(long)]
    pub element: PathBuf,
    #[arg(long)]
    pub candidate: PathBuf,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub k: u32,
    #[command(flatten)]
    pub format: Format,
}

/// Everything one invocation produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: ExitStatus,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: ExitStatus::Success,
            stdout,
            stderr: String::new(),
        }
    }
}

fn emit<T: Serialize>(value: &T, format: &Format, plain: impl FnOnce(&T) -> String) -> Result<String, CliError> {
    let body = if format.plain {
        return Ok(plain(value));
    } else if format.compact {
        serde_json::to_string(value)
    } else {
        serde_json::to_string_pretty(value)
    };
    body.map(|s| s + "\n").map_err(|e| CliError::internal(e.to_string()))
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Analyze(a) => {
            let ring = input::load_ring(&a.ring)?;
            let element = input::load_element(&ring, &a.element)?;
            let opts = analyze::AnalyzeOptions {
                orders: a.m.clone(),
                group_ep: a.group_ep,
                stable: a.stable,
                max_k: a.max_k,
            };
            let report = analyze::analyze(&ring, &element, &opts)?;
            Ok(Outcome::ok(emit(&report, &a.format, analyze::render_plain)?))
        }
        Command::Classify(c) => {
            let ring = input::load_ring(&c.ring)?;
            let report = classify::classify(&ring, c.verbose)?;
            Ok(Outcome::ok(emit(&report, &c.format, classify::render_plain)?))
        }
        Command::Examples(e) => {
            let (lines, ok) = examples::run_examples(e.filter.as_deref(), e.corrupt.as_deref());
            let stdout = lines.iter().map(|l| format!("{l}\n")).collect();
            Ok(Outcome {
                status: if ok { ExitStatus::Success } else { ExitStatus::Failure },
                stdout,
                stderr: String::new(),
            })
        }
        Command::Check(c) => {
            let ring = input::load_ring(&c.ring)?;
            let element = input::load_element(&ring, &c.element)?;
            let candidate = input::load_element(&ring, &c.candidate)?;
            let report = check::check(&ring, &element, &candidate, c.m, c.k)?;
            let stdout = emit(&report, &c.format, check::render_plain)?;
            Ok(Outcome {
                status: if report.holds { ExitStatus::Success } else { ExitStatus::Failure },
                stdout,
                stderr: String::new(),
            })
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    dispatch(cli).unwrap_or_else(|e| Outcome {
        status: e.status,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_definitions_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn order_list_and_defaults() {
        let cli = Cli::try_parse_from(["mwg", "analyze", "--ring", "r", "--element", "e", "--m", "1,2"]).unwrap();
        let Command::Analyze(a) = cli.command else { panic!() };
        assert_eq!(a.m, vec![1, 2]);
        assert_eq!(a.max_k, 16);
        let cli = Cli::try_parse_from(["mwg", "analyze", "--ring", "r", "--element", "e"]).unwrap();
        let Command::Analyze(a) = cli.command else { panic!() };
        assert_eq!(a.m, vec![0, 1, 2]);
    }

    #[test]
    fn examples_without_files() {
        let cli = Cli::try_parse_from(["mwg", "examples", "--filter", "z4"]).unwrap();
        let out = run(&cli);
        assert_eq!(out.status, ExitStatus::Success);
        assert!(out.stdout.starts_with("PASS  z4"));
        let cli = Cli::try_parse_from(["mwg", "examples", "--corrupt", "z4"]).unwrap();
        assert_eq!(run(&cli).status, ExitStatus::Failure);
    }
}
