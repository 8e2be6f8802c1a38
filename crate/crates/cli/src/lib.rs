//! Library behind the `cvc` binary: argument definitions and one module per
//! subcommand. Exposed as a library so integration tests can drive the
//! suites directly.

pub mod bench;
pub mod emit;
pub mod error;
pub mod gen;
pub mod solve;
pub mod verify;

use std::fs;
use std::io::Read;
use std::path::Path;
use std::time::Duration;

use clap::{Parser, Subcommand};
use cvc_core::graph::parse_dimacs;
use cvc_core::Graph;

pub use error::{CliError, CliResult};

/// Exact solvers and formulations for minimum connected vertex cover.
#[derive(Debug, Parser)]
#[command(name = "cvc", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write seeded random instances as DIMACS files.
    Gen(gen::GenArgs),
    /// Solve one DIMACS instance.
    Solve(solve::SolveArgs),
    /// Write a mixed-integer formulation of an instance as an LP file.
    Emit(emit::EmitArgs),
    /// Run exhaustive correctness suites on a seeded corpus.
    Verify(verify::VerifyArgs),
    /// Run the solver over seeded instance families and write a CSV table.
    Bench(bench::BenchArgs),
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Gen(a) => gen::run(&a),
        Command::Solve(a) => solve::run(&a),
        Command::Emit(a) => emit::run(&a),
        Command::Verify(a) => verify::run(&a),
        Command::Bench(a) => bench::run(&a),
    }
}

/// Reads a DIMACS graph from a path, or stdin for `-`.
pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?
    };
    parse_dimacs(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// Parses a strictly positive number of seconds.
pub fn parse_seconds(s: &str) -> Result<Duration, String> {
    let secs: f64 = s.parse().map_err(|_| format!("`{s}` is not a number of seconds"))?;
    if !(secs > 0.0 && secs.is_finite()) {
        return Err("time limit must be a positive number of seconds".into());
    }
    Ok(Duration::from_secs_f64(secs))
}

pub fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !(0.0..=1.0).contains(&p) {
        return Err("probability must lie in [0, 1]".into());
    }
    Ok(p)
}

/// `0.05` becomes `005`, `0.2` becomes `020`.
pub fn density_tag(p: f64) -> String {
    format!("{p:.2}").replace('.', "")
}
