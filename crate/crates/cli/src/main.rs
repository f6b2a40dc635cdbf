//! rmprop — command-line frontend for the S³ trigonometric Rosen-Morse
//! library. stdout carries data only; diagnostics go to stderr; exit codes
//! follow the documented contract (2 config, 3 domain, 4 verification,
//! 5 solver).

mod cli;
mod commands;
mod config;
mod emit;
mod error;

use clap::Parser;
use cli::{Cli, Command};
use commands::CommandOutput;
use config::Format;
use emit::{emit_csv, emit_json};
use error::CliError;
use std::io::Write;

fn main() {
    let parsed = Cli::parse();
    if let Err(e) = run(parsed) {
        eprintln!("rmprop: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(parsed: Cli) -> Result<(), CliError> {
    let output = match parsed.command {
        Command::Potential(args) => commands::potential::run(args)?,
        Command::Propagator(args) => commands::propagator::run(args)?,
        Command::Fig1(args) => commands::fig1::run(args)?,
        Command::Spectrum(args) => commands::spectrum::run(args)?,
        Command::Harmonic(args) => commands::harmonic::run(args)?,
    };
    emit(output)
}

fn emit(out: CommandOutput) -> Result<(), CliError> {
    let text = match out.output.format {
        Format::Csv => emit_csv(&out.table),
        Format::Json => emit_json(&out.echo, &out.table),
    };
    match &out.output.out {
        Some(path) => std::fs::write(path, text.as_bytes())?,
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle.write_all(text.as_bytes())?;
            handle.flush()?;
        }
    }
    for line in &out.diagnostics {
        eprintln!("{line}");
    }
    match out.post {
        Some(err) => Err(err),
        None => Ok(()),
    }
}
