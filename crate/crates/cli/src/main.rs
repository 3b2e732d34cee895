mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eqkl::equivariant::Which;
use eqkl::groups::DEFAULT_ENUM_BOUND;

#[derive(Parser)]
#[command(name = "eqkl", version, about = "Equivariant Kazhdan-Lusztig polynomials of matroids")]
struct Cli {
    /// Largest group the tool will enumerate element by element.
    #[arg(long, global = true, env = "EQKL_ENUM_BOUND", default_value_t = DEFAULT_ENUM_BOUND)]
    enum_bound: usize,

    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute P, Q or Z of a matroid under a group.
    Compute(commands::ComputeArgs),
    /// Print a relaxation correction polynomial over the symmetric group.
    Correction {
        #[arg(value_enum, ignore_case = true)]
        kind: CorrectionKind,
        k: usize,
        h: usize,
    },
    /// Check a Steiner system, character table, group or matroid file.
    Validate {
        #[arg(value_enum)]
        target: ValidateTarget,
        path: String,
        /// Group to check against (tables and Steiner systems).
        #[arg(long)]
        group: Option<String>,
    },
    /// Check that P of the uniform matroid minus P of the input is honest.
    Gedeon(commands::GedeonArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CorrectionKind {
    P,
    Q,
    Z,
    R,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ValidateTarget {
    Steiner,
    Table,
    Group,
    Matroid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Brute,
    Paving,
    Uniform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Poly {
    P,
    Q,
    Z,
}

impl From<Poly> for Which {
    fn from(p: Poly) -> Which {
        match p {
            Poly::P => Which::P,
            Poly::Q => Which::Q,
            Poly::Z => Which::Z,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return commands::Failure::Usage(e.to_string()).report();
        }
    }
    let result = match cli.command {
        Command::Compute(args) => commands::compute(&args, cli.enum_bound),
        Command::Correction { kind, k, h } => commands::correction(kind, k, h),
        Command::Validate { target, path, group } => {
            commands::validate(target, &path, group.as_deref(), cli.enum_bound)
        }
        Command::Gedeon(args) => commands::gedeon(&args, cli.enum_bound),
    };
    match result {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}
