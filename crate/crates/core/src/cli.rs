//! Command-line front end.
//!
//! Data goes to stdout, diagnostics and timings to stderr. Exit codes:
//! 0 success (or "avoids" for `check`), 1 pattern contained, 2 usage error,
//! 3 exhaustive-search limit exceeded.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerate::{
    check_recursion, count_symmetry_checks, k_closed, k_via_corollary, oracle_checks, structural_checks, CountError,
    CountTable, Exhaustive, DEFAULT_SEARCH_LIMIT,
};
use crate::perm::{Permutation, SplitPattern};
use crate::report::{all_passed, Check};
use crate::series::{bessel_checks, exp_boundary_residual, generating_function_checks, symmetry_checks, vandermonde_check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTAINS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Count, enumerate and check permutations avoiding 3|12 and 23|1 with
/// respect to a position r, and verify the associated series identities.
#[derive(Debug, Parser)]
#[command(name = "split-avoid", version)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Raise the largest n accepted by exhaustive enumeration (default 10).
    #[arg(long, global = true, value_name = "INT")]
    pub unsafe_n_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Lines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Corollary,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Main2,
    Bessel,
    Recursion,
    Symmetry,
    Fibers,
    Oracle,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print k(r, n) for 1 <= n <= n-max.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=100))]
        n_max: u16,
        #[arg(long)]
        r_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print k(r, n) by the chosen method.
    Count {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Test one permutation against both split patterns at position r.
    Check {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        r: usize,
    },
    /// List K(r, n) in lexicographic order.
    Enumerate {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Target::All)]
        target: Target,
        /// Series truncation order (window [0, order]^2).
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Largest n for exhaustive checks.
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Emit a JSON summary instead of the table.
        #[arg(long)]
        json: bool,
    },
}

/// A failure that maps to a non-zero exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        let code = match e {
            CountError::SearchLimit { .. } => EXIT_GUARD,
            CountError::OutOfRange { .. } => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: 1, message: e.to_string() }
    }
}

pub fn main_with_std() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let started = Instant::now();
    let result = execute(&config, out);
    let _ = writeln!(err, "elapsed {:.3}s", started.elapsed().as_secs_f64());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(config: &CliConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let search = Exhaustive::with_limit(config.unsafe_n_max.unwrap_or(DEFAULT_SEARCH_LIMIT));
    match &config.command {
        Command::Table { n_max, r_max, format } => {
            let table = CountTable::build(*n_max as usize);
            let text = match format {
                Format::Csv => table.to_csv(*r_max),
                Format::Json => table.to_json(*r_max) + "\n",
                Format::Lines => return Err(Failure::usage("table supports --format csv or json")),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Count { r, n, method } => {
            let k = match method {
                Method::Formula => k_closed(*r, *n)?,
                Method::Corollary => k_via_corollary(*r, *n)?,
                Method::Brute => search.count(*r, *n)?,
            };
            writeln!(out, "{k}")?;
        }
        Command::Check { perm, r } => return check(perm, *r, out),
        Command::Enumerate { r, n, format } => {
            let perms = search.enumerate_k(*r, *n)?;
            match format {
                Format::Lines => {
                    for w in &perms {
                        writeln!(out, "{w}")?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "perm")?;
                    for w in &perms {
                        writeln!(out, "\"{w}\"")?;
                    }
                }
                Format::Json => {
                    let list: Vec<String> = perms.iter().map(|w| w.to_string()).collect();
                    writeln!(out, "{}", serde_json::to_string(&list).expect("strings serialize"))?;
                }
            }
        }
        Command::Verify { target, order, n_max, json } => {
            return verify(*target, *order, *n_max, *json, &search, out);
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckOutput {
    avoids: bool,
    fiber_bundle: Option<bool>,
    witness_3_12: Option<Vec<usize>>,
    witness_23_1: Option<Vec<usize>>,
}

fn check(text: &str, r: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let w: Permutation = text.parse().map_err(|e| Failure::usage(format!("{e}")))?;
    let witness = |p: SplitPattern| {
        w.contains_split(&p, r)
            .map(|found| found.map(|wit| wit.indices))
            .map_err(|e| Failure::usage(e.to_string()))
    };
    let witness_3_12 = witness(SplitPattern::p3_12())?;
    let witness_23_1 = witness(SplitPattern::p23_1())?;
    let avoids = witness_3_12.is_none() && witness_23_1.is_none();
    // the projection needs 1 <= r <= n
    let fiber_bundle = w.is_fiber_bundle(r).ok();
    let report = CheckOutput { avoids, fiber_bundle, witness_3_12, witness_23_1 };
    writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
    Ok(if avoids { EXIT_OK } else { EXIT_CONTAINS })
}

#[derive(Serialize)]
struct VerifySummary<'a> {
    target: &'a str,
    order: usize,
    n_max: usize,
    passed: bool,
    checks: &'a [Check],
    #[serde(skip_serializing_if = "Option::is_none")]
    exp_boundary_residual: Option<String>,
}

fn verify(
    target: Target,
    order: usize,
    n_max: usize,
    json: bool,
    search: &Exhaustive,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let wants = |t: Target| target == t || target == Target::All;
    let series_target = [Target::Main2, Target::Bessel, Target::Recursion, Target::Symmetry]
        .into_iter()
        .any(wants);
    let exhaustive_target = [Target::Fibers, Target::Oracle].into_iter().any(wants);
    if series_target && order < 2 {
        return Err(Failure::usage("--order must be at least 2"));
    }
    if exhaustive_target && n_max > search.limit() {
        return Err(CountError::SearchLimit { n: n_max, limit: search.limit() }.into());
    }

    let mut checks = Vec::new();
    let mut residual = None;
    if wants(Target::Bessel) {
        checks.extend(bessel_checks(order));
        checks.push(vandermonde_check(order));
    }
    if wants(Target::Main2) {
        checks.extend(generating_function_checks(order));
        residual = Some(exp_boundary_residual(order).to_string());
    }
    if wants(Target::Recursion) {
        let report = check_recursion(order, order);
        let detail = match report.violations.first() {
            None => format!("{} cells exact", report.cells_checked),
            Some(v) => format!(
                "{} violations, first at ({},{}): {} vs {}",
                report.violations.len(),
                v.r,
                v.s,
                v.value,
                v.recurrence
            ),
        };
        checks.push(Check::new("a(r,s) recursion", report.passed(), detail));
    }
    if wants(Target::Symmetry) {
        checks.extend(symmetry_checks(order));
        checks.extend(count_symmetry_checks((2 * order).max(30)));
    }
    if wants(Target::Fibers) {
        checks.extend(structural_checks(n_max, search)?);
    }
    if wants(Target::Oracle) {
        checks.extend(oracle_checks(n_max, search)?);
    }

    let passed = all_passed(&checks);
    let name = target.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    if json {
        let summary = VerifySummary {
            target: &name,
            order,
            n_max,
            passed,
            checks: &checks,
            exp_boundary_residual: residual,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&summary).expect("summary serializes"))?;
    } else {
        for c in &checks {
            writeln!(out, "{c}")?;
        }
        if let Some(res) = residual {
            writeln!(out, "NOTE  K vs (L+1)/(1-x-y+xy) with L(x,0)=e^x, L(0,y)=e^y: {res}")?;
        }
        let failed = checks.iter().filter(|c| !c.passed).count();
        writeln!(out, "{} checks, {} failed", checks.len(), failed)?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_CONTAINS })
}
