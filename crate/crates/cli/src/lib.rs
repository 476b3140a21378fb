// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line pipeline around `qcbench-core`: synthesize gates and error
//! models, reduce unitaries onto qubit subsets, and benchmark the results.
//!
//! Exit codes: 0 on success, 2 for invalid input or failed validation,
//! 3 for size limits and output failures.

pub mod args;
pub mod commands;
pub mod error;
pub mod files;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult, EXIT_VALIDATION};

/// Environment variable that sets the worker thread count.
pub const THREADS_ENV: &str = "QCBENCH_THREADS";

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value.trim().parse().map_err(|_| {
        CliError::Invalid(format!(
            "{THREADS_ENV} must be a positive integer, got \"{value}\""
        ))
    })?;
    if n == 0 {
        return Err(CliError::Invalid(format!(
            "{THREADS_ENV} must be a positive integer"
        )));
    }
    // The global pool can only be set once per process.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn dispatch(cli: &Cli) -> CliResult<()> {
    configure_threads()?;
    let opts = cli.validation.load_options();
    match &cli.command {
        Command::Synth(a) => commands::synth(a),
        Command::Reduce(a) => commands::reduce(a, &opts),
        Command::Simulate(s) => commands::simulate(s),
        Command::Bench(a) => commands::bench(a, &opts),
        Command::Bounds(a) => commands::bounds(a),
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code. Errors are printed to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
