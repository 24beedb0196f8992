//! `hulthen`: spectra, the reference table, parameter sweeps, wavefunctions
//! and finite-difference verification from the command line.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod failure;
mod output;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("hulthen: {failure}");
            ExitCode::from(failure.code())
        }
    }
}
