//! The `circlelab` command line.
//!
//! Exit status: 0 on success, 1 on a domain or evaluation error, 2 when a
//! resource cap is hit, 3 when `verify` finds a disagreement and 64 on a
//! usage error.

mod args;
mod cache;
mod commands;
mod config;
mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::Parser;

pub use args::Cli;
pub use cache::{load_or_sieve, r2_table, CACHE_DIR_ENV};
pub use output::{fmt_sig, read_csv, Cell, Format, Report};

use crate::error::{Error, Result};

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Header of the sweep CSV.
pub const SWEEP_COLUMNS: [&str; 5] = ["x", "count", "pi_x", "delta", "normalized"];

/// Outcome of a command before it is written out.
pub(crate) struct Outcome {
    pub report: Report,
    /// Lines for standard error, e.g. a summary next to CSV rows.
    pub notes: Vec<String>,
    pub status: i32,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, notes: Vec::new(), status: 0 }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_resource() {
        EXIT_RESOURCE
    } else {
        EXIT_DOMAIN
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit status. Output goes to standard output unless `--out` is given.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let argv = match config::expand(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let outcome = commands::dispatch(cli)?;
    let digits = cli.precision as usize;
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    outcome.report.write(cli.format, digits, sink.as_mut())?;
    sink.flush()?;
    for n in &outcome.notes {
        eprintln!("{n}");
    }
    Ok(outcome.status)
}
