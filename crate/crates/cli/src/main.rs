//! `pxgraph`: generate graphs, colour them, verify proper-tree connectivity,
//! evaluate bounds and run seeded experiments.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 indeterminate or
//! partial, 64 usage error, 65 data error.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_PARTIAL: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;

/// An error carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    pub fn data(message: impl Into<String>) -> Self {
        CliError { code: EXIT_DATA, message: message.into() }
    }
}

impl From<pxgraph::Error> for CliError {
    fn from(e: pxgraph::Error) -> Self {
        use pxgraph::Error::*;
        let code = match e {
            InvalidParameter(_) | TooLarge(_) | CapTooLarge { .. } | VertexOutOfRange { .. } => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        CliError { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version requests exit 0, everything else is a usage error
            return if e.exit_code() == 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_USAGE) };
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(CliError::usage("--jobs must be at least 1")),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| commands::run(cli.command)),
            Err(e) => Err(CliError::usage(format!("cannot start {j} worker threads: {e}"))),
        },
        None => commands::run(cli.command),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
