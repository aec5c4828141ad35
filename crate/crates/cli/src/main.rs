#![allow(clippy::result_large_err)]

mod commands;
mod paper;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hasse_core::arith::{parse_integer, parse_rational, Integer, Rational};
use serde::Serialize;
use serde_json::Value;
use std::io::Write;
use std::process::ExitCode;

pub const SCHEMA: &str = "hasse-cli/1";

#[derive(Parser)]
#[command(name = "hasse", version, about = "Exact checks for hyperelliptic curve families violating the Hasse principle")]
struct Cli {
    /// Seed for every sampled check
    #[arg(long, global = true, default_value_t = hasse_core::sample::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for the parallel searches (output does not depend on it)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run every published constant and identity through the library
    VerifyPaper,
    /// Search admissible triples (p, b, d) with d = 2x + 1, b = 6py + b0
    FindTriples(FindTriples),
    /// Check conditions A1–A5, B1 and the genus gate for a sextuple
    CheckSextuple(CheckSextuple),
    /// Move a sextuple along (A, B), or enumerate pairs (0, 2px + B0)
    ExtendSextuple(ExtendSextuple),
    /// Print the curve of a family at parameter T
    EmitCurve(CurveArgs),
    /// Separability, local solvability and point search for one curve
    CheckCurve(CheckCurve),
    /// Height-bounded rational point search
    SearchPoints(SearchPoints),
    /// Local witnesses and the 2-adic invariant scan for a triple
    ThreefoldScan(ThreefoldScan),
}

fn int_arg(s: &str) -> Result<Integer, String> {
    parse_integer(s).map_err(|e| e.to_string())
}

fn rat_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Copy, Clone, ValueEnum)]
pub enum Variant {
    Strict,
    Generalized,
}

#[derive(Args)]
pub struct FindTriples {
    #[arg(long, value_parser = int_arg)]
    pub p: Integer,
    #[arg(long, value_parser = int_arg)]
    pub b0: Integer,
    #[arg(long)]
    pub xmax: u64,
    #[arg(long)]
    pub ymax: u64,
}

/// Either a published family seed or an explicit sextuple.
#[derive(Args)]
pub struct SextupleArgs {
    /// Seed sextuple of family 1 or 2
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), conflicts_with_all = ["p", "alpha"])]
    pub family: Option<u8>,
    #[arg(long, value_parser = int_arg, requires_all = ["b", "d", "alpha", "beta", "gamma", "witness"])]
    pub p: Option<Integer>,
    #[arg(long, value_parser = int_arg)]
    pub b: Option<Integer>,
    #[arg(long, value_parser = int_arg)]
    pub d: Option<Integer>,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    pub beta: Option<Rational>,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    pub gamma: Option<Rational>,
    /// Conic point "u,v,t"
    #[arg(long, allow_hyphen_values = true)]
    pub witness: Option<String>,
}

#[derive(Args)]
pub struct CheckSextuple {
    #[command(flatten)]
    pub sextuple: SextupleArgs,
    /// Genus for the A6/B2 gate
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, value_enum, default_value = "strict")]
    pub variant: Variant,
}

#[derive(Args)]
pub struct ExtendSextuple {
    #[command(flatten)]
    pub sextuple: SextupleArgs,
    #[arg(long = "A", value_parser = rat_arg, allow_hyphen_values = true, conflicts_with = "b0")]
    pub a: Option<Rational>,
    #[arg(long = "B", value_parser = rat_arg, allow_hyphen_values = true, conflicts_with = "b0")]
    pub b_value: Option<Rational>,
    /// Enumerate B = 2px + B0 with A = 0 instead
    #[arg(long = "B0", value_parser = int_arg, allow_hyphen_values = true, requires_all = ["xmin", "xmax"])]
    pub b0: Option<Integer>,
    #[arg(long, allow_hyphen_values = true)]
    pub xmin: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub xmax: Option<i64>,
}

#[derive(Args)]
pub struct CurveArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub family: u8,
    #[arg(long)]
    pub n: u32,
    #[arg(long = "T", value_parser = rat_arg, allow_hyphen_values = true)]
    pub t: Rational,
}

#[derive(Args)]
pub struct CheckCurve {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, default_value_t = 100)]
    pub prime_bound: u64,
    #[arg(long, default_value_t = 1000)]
    pub height_bound: u64,
}

#[derive(Args)]
pub struct SearchPoints {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), requires_all = ["n", "t"], conflicts_with = "coeffs")]
    pub family: Option<u8>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long = "T", value_parser = rat_arg, allow_hyphen_values = true)]
    pub t: Option<Rational>,
    /// Ascending coefficients "c0,c1,..." of an arbitrary f
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub height_bound: u64,
}

#[derive(Args)]
pub struct ThreefoldScan {
    #[arg(long, value_parser = int_arg)]
    pub p: Integer,
    #[arg(long, value_parser = int_arg)]
    pub b: Integer,
    #[arg(long, value_parser = int_arg)]
    pub d: Integer,
    #[arg(long, default_value_t = 9)]
    pub precision: u32,
    #[arg(long, default_value_t = 100)]
    pub prime_bound: u64,
}

/// What a command produced: its JSON result and the names of failed items.
pub struct Outcome {
    pub result: Value,
    pub failures: Vec<String>,
}

pub enum CliError {
    /// Bad flag combinations found after parsing; exit 2.
    Usage(String),
    /// A library error or rejected input; exit 1 with JSON.
    Failed(String),
}

impl From<hasse_core::Error> for CliError {
    fn from(e: hasse_core::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

macro_rules! lib_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Failed(e.to_string())
            }
        }
    )*};
}
lib_error!(
    hasse_core::arith::ArithError,
    hasse_core::local::LocalError,
    hasse_core::conic::ConicError,
    hasse_core::construct::ConstructError,
    hasse_core::ratfunc::RatFuncError,
    hasse_core::curve::CurveError
);

#[derive(Serialize)]
struct Envelope<'a> {
    schema: &'a str,
    command: &'a str,
    status: &'a str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    result: Value,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::VerifyPaper => "verify-paper",
        Command::FindTriples(_) => "find-triples",
        Command::CheckSextuple(_) => "check-sextuple",
        Command::ExtendSextuple(_) => "extend-sextuple",
        Command::EmitCurve(_) => "emit-curve",
        Command::CheckCurve(_) => "check-curve",
        Command::SearchPoints(_) => "search-points",
        Command::ThreefoldScan(_) => "threefold-scan",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let seed = cli.seed;
    let command = cli.command;
    let run = match hasse_core::with_jobs(cli.jobs, move || commands::dispatch(&command, seed)) {
        Ok(r) => r,
        Err(e) => Err(e.into()),
    };
    let (env, code) = match run {
        Ok(out) => {
            let ok = out.failures.is_empty();
            let env = Envelope { schema: SCHEMA, command: name, status: if ok { "pass" } else { "fail" }, failures: out.failures, error: None, result: out.result };
            (env, if ok { 0 } else { 1 })
        }
        Err(CliError::Failed(msg)) => {
            (Envelope { schema: SCHEMA, command: name, status: "error", failures: vec![], error: Some(msg), result: Value::Null }, 1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = serde_json::to_string_pretty(&env).expect("serializable output");
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout(), "{text}");
    ExitCode::from(code)
}
