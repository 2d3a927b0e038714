//! `nclattice`: posets, Bratteli diagrams, primitive spectra and ordered K₀
//! from the command line.
//!
//! Exit status: 0 on success, 1 when the input is well formed but the
//! computation refuses it (non-T₀ basis, `|det T| ≠ 1`, too few levels, a
//! failed round trip), 2 when the input cannot be read or parsed.

mod commands;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "nclattice", version, about = "Finite posets, their AF algebras and ordered K-theory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quotient a covering of a sample to a T0 poset.
    Quotient(Common),
    /// Validate a poset, basis or covering file and summarize it.
    PosetCheck(Common),
    /// Build the Bratteli diagram level by level.
    Bratteli(Common),
    /// List ideals of the diagram and the reconstructed primitive spectrum.
    Spectrum(Common),
    /// K0 group of the stable part, with T and its inverse.
    K0(Common),
    /// Describe the positive cone of K0.
    Cone(Common),
    /// Decide membership of vectors in the positive cone.
    Member(Member),
    /// Check that the spectrum of the constructed diagram is the input poset.
    Roundtrip(Common),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    JsonLines,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Poset, basis or covering file.
    #[arg(required_unless_present = "matrix")]
    pub input: Option<PathBuf>,
    /// Stable incidence matrix file (first line k, then k rows); replaces INPUT.
    #[arg(long, value_name = "FILE", conflicts_with = "input")]
    pub matrix: Option<PathBuf>,
    /// Number of diagram levels to build (default: closed sets + 2).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub depth: Option<u64>,
    /// Largest power of T tried when iterating.
    #[arg(long, default_value_t = 64)]
    pub m_max: usize,
    /// Convergence tolerance of the Perron iteration.
    #[arg(long, default_value_t = 1e-12, value_parser = positive_real)]
    pub tolerance: f64,
    /// Write the report here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct Member {
    #[command(flatten)]
    pub common: Common,
    /// Vector to test, e.g. `-3,5`; may be repeated.
    #[arg(long = "vector", short = 'v', required = true, allow_hyphen_values = true)]
    pub vectors: Vec<String>,
}

fn positive_real(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("`{s}` is not a positive real number")),
    }
}

/// Failure classes, each mapped to an exit status.
#[derive(Debug)]
pub enum Failure {
    Domain(String),
    Parse(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Parse(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Parse(m) => m,
        }
    }
}

impl From<nclattice_core::Error> for Failure {
    fn from(e: nclattice_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Report text plus the exit status it should end with.
pub struct Outcome {
    pub text: String,
    pub status: u8,
}

fn run(cli: Cli) -> Result<(Outcome, Option<PathBuf>), Failure> {
    let (outcome, common) = match &cli.command {
        Command::Quotient(c) => (commands::quotient(c)?, c),
        Command::PosetCheck(c) => (commands::poset_check(c)?, c),
        Command::Bratteli(c) => (commands::bratteli(c)?, c),
        Command::Spectrum(c) => (commands::spectrum(c)?, c),
        Command::K0(c) => (commands::k0(c)?, c),
        Command::Cone(c) => (commands::cone(c)?, c),
        Command::Member(m) => (commands::member(m)?, &m.common),
        Command::Roundtrip(c) => (commands::roundtrip(c)?, c),
    };
    Ok((outcome, common.output.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, path)) => {
            let written = match path {
                Some(p) => fs::write(&p, &outcome.text)
                    .map_err(|e| format!("cannot write {}: {e}", p.display())),
                None => std::io::stdout()
                    .write_all(outcome.text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.status)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
