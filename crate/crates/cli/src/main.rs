//! `kneserlab`: build Kneser graphs of buildings, decide the unique coclique
//! extension property, certify the counterexample fixtures, cross-check the
//! geometric apartments against coset graphs and export graphs.
//!
//! Exit codes: 0 ok, 2 usage, 3 property fails, 4 fixture integrity,
//! 5 cross-validation mismatch.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Command};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kneserlab_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(kneserlab_core::Error::FixtureIntegrity { .. }) => 4,
            _ => 2,
        }
    }
}

/// What a successful command concluded; mapped to the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    PropertyFails,
    Mismatch,
}

impl Outcome {
    fn exit_code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::PropertyFails => 3,
            Outcome::Mismatch => 5,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let jobs = cli.jobs;
    let go = move || match cli.command {
        Command::Build(a) => commands::build(&a),
        Command::CheckUcep(a) => commands::check_ucep(&a),
        Command::VerifyFixtures(a) => commands::verify_fixtures(&a),
        Command::CrossValidate(a) => commands::cross_validate(&a),
        Command::Export(a) => commands::export(&a),
    };
    match jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {k} workers: {e}")))?
            .install(go),
        None => go(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("kneserlab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
