mod commands;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use commands::{AnalyzeOptions, Family, InputFormat};

/// Exit status when a consequence of the theory fails on an input that
/// satisfies its hypotheses.
const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_INPUT_ERROR: u8 = 1;
const TOLERANCE_VAR: &str = "SSL_EIG_TOL";

#[derive(Parser)]
#[command(
    name = "ssl",
    version,
    about = "Structure of graphs with bounded smallest eigenvalue"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full analysis pipeline and print a JSON report.
    Analyze(AnalyzeArgs),
    /// Write a graph from one of the built-in families.
    Generate(GenerateArgs),
    /// Split a Hoffman graph into indecomposable factors.
    Decompose {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print m(lambda), the least m with lambda_min(K~_2m) < -lambda.
    Mlambda {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        lambda: u64,
    },
    /// Split a t-plex into t cliques of near-equal size.
    PartitionPlex {
        path: PathBuf,
        /// Comma-separated vertex indices; defaults to all vertices.
        #[arg(long)]
        vertices: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    path: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    lambda: u64,
    /// Clique order threshold, at least (m+1)^2 for edge-list input.
    #[arg(long)]
    n: usize,
    /// Overrides m(lambda).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    m: Option<u64>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: InputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    skip_ktilde_check: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    family: FamilyArgs,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FamilyArgs {
    /// Clique K_{a+m} plus an apex adjacent to a of its vertices.
    Hat {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        m: usize,
    },
    /// H(m, m).
    Ktilde {
        #[arg(long)]
        m: usize,
    },
    Hamming {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: usize,
    },
    /// K_{2 x r}.
    Cocktail {
        #[arg(long)]
        r: usize,
    },
    /// L(K_n).
    LinegraphOfComplete {
        #[arg(long)]
        n: usize,
    },
    /// Slim graph of the Steiner-system sum (v = 13 or 16).
    SteinerSlim {
        #[arg(long)]
        v: usize,
    },
    /// The Steiner-system sum as a Hoffman graph (v = 13 or 16).
    SteinerHoffman {
        #[arg(long)]
        v: usize,
    },
}

impl From<&FamilyArgs> for Family {
    fn from(f: &FamilyArgs) -> Self {
        match *f {
            FamilyArgs::Hat { a, m } => Family::Hat { a, m },
            FamilyArgs::Ktilde { m } => Family::KTilde { m },
            FamilyArgs::Hamming { d, q } => Family::Hamming { d, q },
            FamilyArgs::Cocktail { r } => Family::Cocktail { r },
            FamilyArgs::LinegraphOfComplete { n } => Family::LineGraphOfComplete { n },
            FamilyArgs::SteinerSlim { v } => Family::SteinerSlim { v },
            FamilyArgs::SteinerHoffman { v } => Family::SteinerHoffman { v },
        }
    }
}

fn tolerance() -> Result<f64> {
    match std::env::var(TOLERANCE_VAR) {
        Ok(s) => {
            let tol: f64 = s
                .trim()
                .parse()
                .with_context(|| format!("{TOLERANCE_VAR}={s} is not a number"))?;
            anyhow::ensure!(
                tol.is_finite() && tol > 0.0,
                "{TOLERANCE_VAR} must be positive"
            );
            Ok(tol)
        }
        Err(_) => Ok(ssl_core::spectrum::DEFAULT_TOLERANCE),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn usize_arg(v: u64) -> Result<usize> {
    usize::try_from(v).context("argument too large")
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze(a) => {
            let opts = AnalyzeOptions {
                lambda: usize_arg(a.lambda)?,
                n: a.n,
                m: a.m.map(usize_arg).transpose()?,
                format: a.format,
                skip_ktilde_check: a.skip_ktilde_check,
                tolerance: tolerance()?,
            };
            let (report, candidate) = commands::analyze(&read(&a.path)?, &opts)?;
            emit(&json(&report)?, a.out.as_deref())?;
            Ok(if candidate { EXIT_COUNTEREXAMPLE } else { 0 })
        }
        Command::Generate(g) => {
            emit(
                &commands::generate(&Family::from(&g.family))?,
                g.out.as_deref(),
            )?;
            Ok(0)
        }
        Command::Decompose { path, out } => {
            let report = commands::decompose(&read(&path)?, tolerance()?)?;
            emit(&json(&report)?, out.as_deref())?;
            Ok(0)
        }
        Command::Mlambda { lambda } => {
            println!("{}", ssl_core::association::m_lambda(usize_arg(lambda)?)?);
            Ok(0)
        }
        Command::PartitionPlex {
            path,
            vertices,
            t,
            out,
        } => {
            let report =
                commands::partition_plex(&read(&path)?, vertices.as_deref(), usize_arg(t)?)?;
            emit(&json(&report)?, out.as_deref())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}
