//! `hlm`: checks, cohomology, deformations and extensions of objects in
//! the category of linear maps, read from JSON instance files.
//!
//! Exit codes: 0 when every check passed, 1 when a mathematical check
//! failed, 2 on unreadable or malformed input.

mod commands;
mod instance;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "hlm", version, about = "Exact checks for Hom-Leibniz objects in the category of linear maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Instance file (JSON).
    pub instance: PathBuf,
    /// Emit the machine-readable report.
    #[arg(long)]
    pub json: bool,
    /// Coefficients; defaults to the `rep` section, then to the adjoint ones.
    #[arg(long, value_name = "FILE")]
    pub rep: Option<PathBuf>,
    /// A 2-cochain; defaults to the `cochain` section.
    #[arg(long, value_name = "FILE")]
    pub cochain: Option<PathBuf>,
    /// A pair `(n0, n1)`; defaults to the `pair` section.
    #[arg(long, value_name = "FILE")]
    pub pair: Option<PathBuf>,
    /// Cohomology degree (1 or 2).
    #[arg(long, value_name = "K", default_value_t = 2)]
    pub degree: usize,
    /// Work on all cochains instead of those commuting with the twists.
    #[arg(long)]
    pub no_alpha_compat: bool,
    /// Truncation order for formal deformation checks.
    #[arg(long, value_name = "N")]
    pub order: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Axioms of the object (and of the coefficients, if given).
    Check(Common),
    /// Cochain dimensions, ranks and cohomology.
    Cohomology(Common),
    /// Whether the cochain is a 2-cocycle.
    Cocycle(Common),
    /// The first-order deformation criterion for the cochain.
    Deform(Common),
    /// Nijenhuis conditions for the pair and triviality of its deformation.
    Nijenhuis(Common),
    /// The induced dialgebra, and the two products of a symmetric object.
    Dialgebra(Common),
    /// The tensor-square object of the algebra.
    TensorSquare(Common),
    /// The abelian extension built from the cochain.
    Extend(Common),
    /// Whether the extensions of the embedded cochain and `--cochain` are equivalent.
    Equivalent(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::Check(a) => ("check", a),
        Command::Cohomology(a) => ("cohomology", a),
        Command::Cocycle(a) => ("cocycle", a),
        Command::Deform(a) => ("deform", a),
        Command::Nijenhuis(a) => ("nijenhuis", a),
        Command::Dialgebra(a) => ("dialgebra", a),
        Command::TensorSquare(a) => ("tensor-square", a),
        Command::Extend(a) => ("extend", a),
        Command::Equivalent(a) => ("equivalent", a),
    };
    match commands::run(name, args) {
        Ok(rep) => {
            print!("{}", if args.json { rep.to_json() } else { rep.to_text() });
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(commands::Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
