//! Command-line front end.
//!
//! Exit codes: 0 when every case passes, 1 when at least one fails (the
//! failing reports are still printed), 2 for usage, domain and budget errors.
//! JSON output is one object per line and is byte-identical across runs with
//! the same arguments; `--timing` adds wall-clock fields and gives that up.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::compositions::{
    enumerate_compositions, enumerate_compositions_lex, Budget, Composition,
};
use crate::error::{Error, Result};
use crate::exact_arith::{parse_rational, Rational};
use crate::identities::{
    list_identities, lookup, parse_span, verify_range, IdentityDescriptor, Randomness, Ranges,
    SuiteReport, VerifyConfig,
};
use crate::random::DEFAULT_SEED;
use crate::stirling::StirlingTable;
use crate::symfun::{bernoulli_table, gaussian_binomial};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "compident",
    version,
    about = "Exact verification of composition-generated identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check identities over parameter ranges.
    Verify(Box<VerifyArgs>),
    /// List registered identities.
    List {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a table of Stirling numbers, Bernoulli numbers or a Gaussian binomial.
    Table {
        #[command(subcommand)]
        table: TableCommand,
        #[arg(long, value_enum, default_value_t, global = true)]
        format: Format,
    },
    /// Enumerate the compositions of K, optionally only those with R parts.
    Compositions {
        k: usize,
        #[arg(long)]
        r: Option<usize>,
        /// Defaults to one comma-joined composition per line.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["id", "all"]))]
struct VerifyArgs {
    #[arg(long)]
    id: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, value_name = "LO..HI", value_parser = span)]
    k: Option<RangeInclusive<i64>>,
    #[arg(long, value_name = "LO..HI", value_parser = span)]
    n: Option<RangeInclusive<i64>>,
    #[arg(long, value_name = "LO..HI", value_parser = span)]
    t: Option<RangeInclusive<i64>>,
    #[arg(long, value_name = "LO..HI", value_parser = span)]
    x: Option<RangeInclusive<i64>>,
    #[arg(long, value_name = "P/Q", value_parser = rational, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_name = "P/Q", value_parser = rational, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    samples: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Include wall-clock times in the output.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Subcommand)]
enum TableCommand {
    /// Rows 1..=N of the signed Stirling numbers of the first kind.
    Stirling {
        #[arg(long)]
        n: usize,
    },
    /// B_0..=B_MAX.
    Bernoulli {
        #[arg(long)]
        max: usize,
    },
    /// Coefficients of [N choose K]_q, constant term first.
    Gaussian {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
    },
}

fn span(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    parse_span(s).map_err(|e| e.to_string())
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_PASS
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Verify(args) => verify(*args, out),
        Command::List { format } => {
            for desc in list_identities() {
                match format {
                    Format::Json => emit(
                        out,
                        &serde_json::to_string(desc).expect("descriptor serializes"),
                    )?,
                    Format::Text => emit(out, &format!("{:<17} {}", desc.id, desc.statement))?,
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Table { table, format } => {
            let (rows, nested): (Vec<Vec<String>>, bool) = match table {
                TableCommand::Stirling { n } => {
                    let table = StirlingTable::build(n);
                    let rows =
                        (1..=n).map(|m| table.row(m).iter().map(|v| v.to_string()).collect());
                    (rows.collect(), true)
                }
                TableCommand::Bernoulli { max } => (
                    vec![bernoulli_table(max).iter().map(|b| b.to_string()).collect()],
                    false,
                ),
                TableCommand::Gaussian { n, k } => {
                    let coeffs = gaussian_binomial(n, k)?
                        .coeffs()
                        .iter()
                        .map(|c| c.to_string())
                        .collect();
                    (vec![coeffs], false)
                }
            };
            match format {
                Format::Json if nested => emit(out, &json(&rows))?,
                Format::Json => emit(out, &json(&rows[0]))?,
                Format::Text => {
                    for row in rows {
                        emit(out, &row.join(" "))?;
                    }
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Compositions { k, r, format } => {
            Budget::from_env()?.check(k)?;
            let all: Box<dyn Iterator<Item = Composition>> = match r {
                Some(r) => Box::new(enumerate_compositions(k, r)?),
                None => Box::new(enumerate_compositions_lex(k)?),
            };
            for c in all {
                match format {
                    Format::Text => emit(out, &c.to_string())?,
                    Format::Json => emit(
                        out,
                        &json(&c.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>()),
                    )?,
                }
            }
            Ok(EXIT_PASS)
        }
    }
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let config = VerifyConfig {
        seed: args.seed,
        samples: args.samples.map(|s| s as usize),
        a: args.a.clone(),
        b: args.b.clone(),
        budget: Budget::from_env()?,
        jobs: args.jobs.map(|j| j as usize),
    };
    let mut ranges = Ranges::new();
    for (name, range) in [
        ("k", &args.k),
        ("n", &args.n),
        ("t", &args.t),
        ("x", &args.x),
    ] {
        if let Some(r) = range {
            ranges.set(name, r.clone());
        }
    }
    let targets: Vec<&IdentityDescriptor> = match &args.id {
        Some(id) => {
            let desc = lookup(id)?;
            check_rational_flags(desc, &args)?;
            vec![desc]
        }
        None => list_identities().iter().collect(),
    };
    let mut reports = Vec::new();
    for desc in targets {
        // Under --all a range flag only applies to identities that have the parameter.
        let own = if args.all {
            let mut own = Ranges::new();
            for name in ranges.names().filter(|n| desc.param(n).is_some()) {
                own.set(name, ranges.get(name).expect("listed").clone());
            }
            own
        } else {
            ranges.clone()
        };
        let report = verify_range(desc.id, &own, &config)?;
        match args.format {
            Format::Json => emit(out, &report.to_json(args.timing))?,
            Format::Text => emit(out, &text_report(&report, args.timing))?,
        }
        reports.push(report);
    }
    Ok(exit_code(&reports))
}

fn exit_code(reports: &[SuiteReport]) -> i32 {
    if reports.iter().all(SuiteReport::passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn check_rational_flags(desc: &IdentityDescriptor, args: &VerifyArgs) -> Result<()> {
    let takes_a = matches!(desc.randomness, Randomness::A | Randomness::AB);
    let takes_b = desc.randomness == Randomness::AB;
    if args.a.is_some() && !takes_a {
        return Err(Error::Domain(format!("{} takes no parameter `a`", desc.id)));
    }
    if args.b.is_some() && !takes_b {
        return Err(Error::Domain(format!("{} takes no parameter `b`", desc.id)));
    }
    Ok(())
}

fn text_report(report: &SuiteReport, timing: bool) -> String {
    let verdict = if report.passed() { "ok" } else { "FAILED" };
    let mut s = format!(
        "{:<17} {:>5} cases  {:>3} failed  {verdict}",
        report.id, report.cases_total, report.cases_failed
    );
    if timing {
        s += &format!("  {} ms", report.elapsed.as_millis());
    }
    for f in &report.first_failures {
        let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s += &format!(
            "\n  {}\n    lhs = {}\n    rhs = {}",
            params.join(" "),
            f.lhs,
            f.rhs
        );
    }
    s
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn emit(out: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(|e| Error::Internal(format!("write failed: {e}")))
}

/// Convenience for callers that want captured output.
pub fn run_captured<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
    )
}
