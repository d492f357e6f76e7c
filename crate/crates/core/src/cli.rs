//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the process exit code: 0 on success, 1 when a
//! verification fails or a runtime error occurs, 2 on usage errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::census::{
    count_r1, count_set_s, count_traversals_brute, count_traversals_dp, r1_grid, BandDiagram,
    GridSpec, ProhibitionSequence,
};
use crate::error::{Error, Result};
use crate::macdonald::{macdonald_general, macdonald_r1, SecantParams, Version};
use crate::plucker::{maximal_chains, prohibition_of_chain};
use crate::report::{self, CountCase, COUNT_HEADER, NK_HEADER};
use crate::verify::{self, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "secant-census",
    version,
    about = "Exact secant-plane counts on general curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Macdonald's formula.
    Macdonald(MacdonaldArgs),
    /// Count inclusions on an elliptic chain.
    Count(CountArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Emit stratum or count tables.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MacdonaldVersion {
    One,
    Two,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct MacdonaldArgs {
    #[arg(long)]
    pub g: u64,
    #[arg(long)]
    pub s: u64,
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub r: u64,
    #[arg(long = "version", value_enum, default_value = "one")]
    pub method: MacdonaldVersion,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    R1,
    Rs1,
    /// Arbitrary prohibition sequence (experimental).
    Grid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dp,
    Brute,
    Stratified,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub case: CaseArg,
    /// Pencil parameter for `r1`.
    #[arg(long)]
    pub t: Option<u32>,
    /// Rank parameter for `rs1`.
    #[arg(long)]
    pub r: Option<u32>,
    /// Chain multiplicity (`r1`, `rs1`).
    #[arg(long)]
    pub u: Option<u32>,
    /// Forbidden labels for `grid`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub labels: Vec<u32>,
    /// Label modulus for `grid`.
    #[arg(long)]
    pub modulus: Option<u32>,
    /// Column count for `grid`.
    #[arg(long)]
    pub g: Option<u64>,
    #[arg(long, value_enum, default_value = "dp")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Claims,
    Fixtures,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 6)]
    pub max_d: u64,
    #[arg(long, default_value_t = 10)]
    pub max_u: u64,
    #[arg(long, default_value_t = 6)]
    pub max_s: u64,
    /// Directory holding replacement fixture files.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Nk,
    Counts,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableCase {
    R1,
    Rs1,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub what: TableKind,
    /// Rows `d` for `nk`, as `a..b` or `a`.
    #[arg(long, default_value = "2..6", value_parser = parse_range)]
    pub d: RangeInclusive<u64>,
    #[arg(long, value_enum, default_value = "r1")]
    pub case: TableCase,
    #[arg(long, value_parser = parse_range)]
    pub t: Option<RangeInclusive<u64>>,
    #[arg(long, value_parser = parse_range)]
    pub r: Option<RangeInclusive<u64>>,
    #[arg(long, default_value = "1..3", value_parser = parse_range)]
    pub u: RangeInclusive<u64>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Parses `a..b` (inclusive) or a single value `a`.
pub fn parse_range(text: &str) -> std::result::Result<RangeInclusive<u64>, String> {
    let num = |s: &str| s.trim().parse::<u64>().map_err(|e| format!("`{s}`: {e}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {text}"));
    }
    Ok(lo..=hi)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_)
        | Error::GuardExceeded { .. }
        | Error::InvalidWord { .. }
        | Error::InvalidTableau(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn write_err(e: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Macdonald(a) => cmd_macdonald(&a, out),
        Command::Count(a) => cmd_count(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Table(a) => cmd_table(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn print_record(
    format: OutputFormat,
    record: serde_json::Value,
    out: &mut dyn Write,
) -> Result<()> {
    match format {
        OutputFormat::Json => writeln!(out, "{record}"),
        OutputFormat::Text => {
            let mut res = Ok(());
            if let serde_json::Value::Object(map) = &record {
                for (k, v) in map {
                    let shown = match v {
                        serde_json::Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    res = res.and(writeln!(out, "{k}: {shown}"));
                }
            }
            res
        }
    }
    .map_err(write_err)
}

fn cmd_macdonald(a: &MacdonaldArgs, out: &mut dyn Write) -> Result<i32> {
    let p = SecantParams::new(a.g, a.s, a.m, a.d, a.r)?;
    let (value, method) = match a.method {
        MacdonaldVersion::One => (macdonald_general(&p, Version::One)?, "one"),
        MacdonaldVersion::Two => (macdonald_general(&p, Version::Two)?, "two"),
        MacdonaldVersion::Closed => {
            if p.r != 1 || p.s != 2 * p.d - 2 {
                return Err(Error::invalid("the closed form needs r = 1 and s = 2d - 2"));
            }
            (macdonald_r1(p.d, p.g, p.m), "closed")
        }
    };
    let record = json!({
        "value": value.to_string(),
        "g": p.g, "s": p.s, "m": p.m, "d": p.d, "r": p.r,
        "rho": p.rho(),
        "mu": p.mu(),
        "method": method,
    });
    print_record(a.format, record, out)?;
    Ok(EXIT_OK)
}

fn required<T: Copy>(v: Option<T>, flag: &str, case: &str) -> Result<T> {
    v.ok_or_else(|| Error::invalid(format!("--{flag} is required for --case {case}")))
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> Result<i32> {
    let method = match a.method {
        Method::Dp => "dp",
        Method::Brute => "brute",
        Method::Stratified => "stratified",
    };
    let record = match a.case {
        CaseArg::R1 => {
            let t = required(a.t, "t", "r1")?;
            let u = required(a.u, "u", "r1")?;
            let value = match a.method {
                Method::Dp => count_traversals_dp(&r1_grid(t, u)?),
                Method::Brute => count_set_s(t, u)?,
                Method::Stratified => count_r1(t, u)?,
            };
            json!({"value": value.to_string(), "case": "r1", "t": t, "u": u, "method": method})
        }
        CaseArg::Rs1 => {
            let r = required(a.r, "r", "rs1")?;
            let u = required(a.u, "u", "rs1")?;
            if r < 2 || u == 0 {
                return Err(Error::invalid("rs1 needs r >= 2 and u >= 1"));
            }
            let n = r + 2;
            let g = n as u64 * u as u64;
            let grids: Vec<GridSpec> = maximal_chains(n)?
                .iter()
                .map(|c| GridSpec::new(g, prohibition_of_chain(c)))
                .collect();
            let value: BigInt = match a.method {
                Method::Dp => grids.iter().map(count_traversals_dp).sum(),
                Method::Brute => grids
                    .iter()
                    .map(count_traversals_brute)
                    .sum::<Result<BigInt>>()?,
                Method::Stratified => {
                    return Err(Error::invalid(
                        "no stratified engine for rs1; use --method dp or brute",
                    ))
                }
            };
            json!({"value": value.to_string(), "case": "rs1", "r": r, "u": u, "method": method, "chains": grids.len()})
        }
        CaseArg::Grid => {
            let modulus = required(a.modulus, "modulus", "grid")?;
            let g = required(a.g, "g", "grid")?;
            let lam = ProhibitionSequence::new(a.labels.clone(), modulus)?;
            let spec = GridSpec::new(g, lam.clone());
            let value = match a.method {
                Method::Dp => count_traversals_dp(&spec),
                Method::Brute => count_traversals_brute(&spec)?,
                Method::Stratified => {
                    if g % modulus as u64 != 0 {
                        return Err(Error::invalid(
                            "stratified grid counts need g divisible by the modulus",
                        ));
                    }
                    let band = BandDiagram::new(&lam);
                    let u = g / modulus as u64;
                    let stratified = band.stratified_count(u);
                    let leftover = band.leftover(u);
                    let record = json!({
                        "value": (&stratified + &leftover).to_string(),
                        "case": "grid", "labels": lam.labels(), "modulus": modulus, "g": g,
                        "method": method,
                        "periods": band.periods,
                        "stratified": stratified.to_string(),
                        "leftover": leftover.to_string(),
                    });
                    print_record(a.format, record, out)?;
                    return Ok(EXIT_OK);
                }
            };
            json!({"value": value.to_string(), "case": "grid", "labels": lam.labels(), "modulus": modulus, "g": g, "method": method})
        }
    };
    print_record(a.format, record, out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut checks: Vec<Check> = Vec::new();
    let want = |s: Suite| a.suite == s || a.suite == Suite::All;
    if want(Suite::Identities) {
        checks.extend(verify::identities(a.max_d, a.max_u));
    }
    if want(Suite::Claims) {
        checks.extend(verify::claims(a.max_s.min(crate::chains::MAX_CLAIM_RANK)));
    }
    if want(Suite::Fixtures) {
        checks.extend(verify::fixtures(a.fixtures.as_deref()));
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    for c in &checks {
        let line = serde_json::to_string(c).expect("checks serialise");
        writeln!(out, "{line}").map_err(write_err)?;
    }
    let summary = json!({"summary": true, "checks": checks.len(), "passed": checks.len() - failed, "failed": failed});
    writeln!(out, "{summary}").map_err(write_err)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    let mut file;
    let sink: &mut dyn Write = match &a.output {
        Some(path) => {
            file = File::create(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            &mut file
        }
        None => out,
    };
    match a.what {
        TableKind::Nk => {
            let rows = report::nk_table(a.d.clone())?;
            match a.format {
                TableFormat::Csv => report::write_csv(&rows, &NK_HEADER, sink)?,
                TableFormat::Json => report::write_json(&rows, sink)?,
            }
        }
        TableKind::Counts => {
            let (case, params) = match a.case {
                TableCase::R1 => (CountCase::R1, a.t.clone().unwrap_or(1..=3)),
                TableCase::Rs1 => (CountCase::Rs1, a.r.clone().unwrap_or(2..=3)),
            };
            let rows = report::counts_table(case, params, a.u.clone())?;
            match a.format {
                TableFormat::Csv => report::write_csv(&rows, &COUNT_HEADER, sink)?,
                TableFormat::Json => report::write_json(&rows, sink)?,
            }
        }
    }
    Ok(EXIT_OK)
}
