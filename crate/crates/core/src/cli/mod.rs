//! Command-line front end: `exact`, `count`, `bound` and `verify`.
//!
//! Big integers are printed as decimal strings. `KRONBOUND_LIMITS` (see
//! [`crate::limits`]) overrides the enumeration caps. Exit status is 0 on
//! success, 1 when a sweep finds violations, 2 on bad input and 3 when a
//! resource limit is hit.

mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::barvinok::count_approx;
use crate::bounds::compare_selected;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partitions::{count_partitions, count_plane_partitions, Partition};
use crate::symfun::{character, dim_irrep, kostka, kronecker, lr_coefficient, reduced_kronecker, reduced_kronecker_size};
use crate::tables::{count_binary_3d_with, count_pyramids_with, count_tables_2d, count_tables_3d_with};

pub use verify::{run_verify, Suite, SuiteSummary, SweepResult, Tightness, Violation};

#[derive(Debug, Parser)]
#[command(name = "kronbound", version, about = "Kronecker coefficients, table counts and their bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact representation-theoretic numbers.
    Exact {
        kind: ExactKind,
        /// Partitions written as "7,4,2".
        #[arg(required = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Exact counts of tables, pyramids and partitions.
    Count {
        kind: CountKind,
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Every bound on g(λ,µ,ν), with the exact value when computable.
    Bound {
        lambda: String,
        mu: String,
        nu: String,
        /// One CSV row per bound instead of JSON.
        #[arg(long)]
        csv: bool,
        /// Comma-separated bound names to keep.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Exhaustive invariant sweeps over all partitions of n.
    Verify {
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        suite: Vec<Suite>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExactKind {
    /// g(λ,µ,ν)
    Kronecker,
    /// K(shape, content)
    Kostka,
    /// c^λ_{µν}
    Lr,
    /// χ^λ(µ)
    Char,
    /// f^λ
    Dim,
    /// ḡ(α,β,γ)
    Reduced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    /// T(λ,µ)
    T2,
    /// T(λ,µ,ν)
    T3,
    /// B(λ,µ,ν)
    B3,
    /// Pyr(λ,µ,ν)
    Pyr,
    /// p(n)
    P,
    /// p₂(n)
    P2,
}

#[derive(Serialize)]
struct ExactOutput<'a> {
    kind: &'a str,
    input: Vec<String>,
    value: String,
}

#[derive(Serialize)]
struct CountOutput<'a> {
    kind: &'a str,
    input: Vec<String>,
    value: String,
    approx: String,
}

fn kind_name(kind: impl ValueEnum) -> String {
    kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn parse_partitions(args: &[String], expected: usize, what: &str) -> Result<Vec<Partition>> {
    if args.len() != expected {
        return Err(Error::InvalidArgument(format!("{what} takes {expected} partition(s), got {}", args.len())));
    }
    args.iter().map(|s| s.parse()).collect()
}

fn parse_size(args: &[String], what: &str) -> Result<usize> {
    match args {
        [s] => s.trim().parse().map_err(|e| Error::InvalidArgument(format!("{what}: {s:?}: {e}"))),
        _ => Err(Error::InvalidArgument(format!("{what} takes one size, got {} arguments", args.len()))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize")
}

/// Runs one command, writing its result to `out`. Returns the exit status
/// for successful runs (1 only for sweeps with violations).
pub fn run(cli: &Cli, limits: &Limits, out: &mut impl Write, err: &mut impl Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("write failed: {e}"));
    match &cli.command {
        Command::Exact { kind, args } => {
            let (input, value) = exact(*kind, args, limits)?;
            let name = kind_name(*kind);
            writeln!(out, "{}", to_json(&ExactOutput { kind: &name, input, value })).map_err(io)?;
            Ok(0)
        }
        Command::Count { kind, args } => {
            let (input, value) = count(*kind, args, limits)?;
            let name = kind_name(*kind);
            let approx = count_approx(&value);
            writeln!(out, "{}", to_json(&CountOutput { kind: &name, input, value: value.to_string(), approx })).map_err(io)?;
            Ok(0)
        }
        Command::Bound { lambda, mu, nu, csv, only } => {
            let [l, m, n]: [Partition; 3] = [lambda.parse()?, mu.parse()?, nu.parse()?];
            let report = compare_selected(&l, &m, &n, limits, only.as_deref())?;
            if *csv {
                write!(out, "{}", report.to_csv()).map_err(io)?;
            } else {
                writeln!(out, "{}", to_json(&report)).map_err(io)?;
            }
            Ok(0)
        }
        Command::Verify { n, suite, workers } => {
            let result = run_verify(*n, suite, *workers, limits)?;
            writeln!(out, "{}", to_json(&result)).map_err(io)?;
            writeln!(err, "verify {n}: {} checks in {:.3}s", result.checked, result.wall_time.as_secs_f64()).map_err(io)?;
            Ok(if result.is_clean() { 0 } else { 1 })
        }
    }
}

fn exact(kind: ExactKind, args: &[String], limits: &Limits) -> Result<(Vec<String>, String)> {
    let arity = match kind {
        ExactKind::Dim => 1,
        ExactKind::Kostka | ExactKind::Char => 2,
        _ => 3,
    };
    let ps = parse_partitions(args, arity, &kind_name(kind))?;
    let value = match kind {
        ExactKind::Kronecker => {
            Limits::check("n for the character formula", ps[0].size(), limits.kronecker_n)?;
            kronecker(&ps[0], &ps[1], &ps[2])?.to_string()
        }
        ExactKind::Kostka => {
            if ps[0].size() != ps[1].size() {
                return Err(Error::sizes("Kostka numbers need |shape| = |content|", &[ps[0].size(), ps[1].size()]));
            }
            kostka(&ps[0], &ps[1]).to_string()
        }
        ExactKind::Lr => lr_coefficient(&ps[0], &ps[1], &ps[2])?.to_string(),
        ExactKind::Char => character(&ps[0], &ps[1])?.to_string(),
        ExactKind::Dim => dim_irrep(&ps[0]).to_string(),
        ExactKind::Reduced => {
            let n = reduced_kronecker_size(&ps[0], &ps[1], &ps[2]);
            Limits::check("stable n for the reduced coefficient", n + 1, limits.kronecker_n)?;
            reduced_kronecker(&ps[0], &ps[1], &ps[2])?.to_string()
        }
    };
    Ok((ps.iter().map(Partition::to_string).collect(), value))
}

fn count(kind: CountKind, args: &[String], limits: &Limits) -> Result<(Vec<String>, crate::Count)> {
    let name = kind_name(kind);
    match kind {
        CountKind::P | CountKind::P2 => {
            let n = parse_size(args, &name)?;
            let value = if kind == CountKind::P {
                count_partitions(n)
            } else {
                count_plane_partitions(n)
            };
            Ok((vec![n.to_string()], value))
        }
        _ => {
            let arity = if kind == CountKind::T2 { 2 } else { 3 };
            let ps = parse_partitions(args, arity, &name)?;
            let value = match kind {
                CountKind::T2 => count_tables_2d(&ps[0], &ps[1])?,
                CountKind::T3 => count_tables_3d_with(&ps[0], &ps[1], &ps[2], limits)?,
                CountKind::B3 => count_binary_3d_with(&ps[0], &ps[1], &ps[2], limits)?,
                _ => count_pyramids_with(&ps[0], &ps[1], &ps[2], limits)?,
            };
            Ok((ps.iter().map(Partition::to_string).collect(), value))
        }
    }
}

/// Parses the process arguments and runs, mapping errors to exit codes.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(&cli, &limits, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
