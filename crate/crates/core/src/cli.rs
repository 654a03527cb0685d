//! The `mpart` command-line surface.
//!
//! Each `cmd_*` function does the work of one subcommand and returns an
//! [`OutputRecord`]; [`run`] parses arguments, dispatches and renders. Data
//! goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use thiserror::Error;

use crate::bounds::largest_part_bounds;
use crate::counting::{
    a, a_via_genfun, build_table, gf_coefficients, is_upper_half, upper_half_window, BinarySeries,
    CountTable,
};
use crate::enumeration::{count_by_enumeration, EnumerationCursor};
use crate::error::Error;
use crate::generate::generate;
use crate::partition::{floor_log2, is_m_partition, is_weak_m_partition, Partition};
use crate::record::{
    ints, BoundsReport, CountMethod, CountReport, EnumerateReport, Format, GenerateReport,
    GroupResult, Int, OutputRecord, SelftestReport, SeriesReport, SeriesRow, TableReport, TableRow,
    VerifyReport,
};

/// Table 1 as published, in the exact `table --format csv` layout.
pub const TABLE1_GOLDEN: &str = include_str!("../data/table1.csv");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("selftest failed")]
    SelftestFailed(OutputRecord),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recurrence,
    Enumerate,
    Genfun,
    Auto,
}

impl From<MethodArg> for CountMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Recurrence => CountMethod::Recurrence,
            MethodArg::Enumerate => CountMethod::Enumerate,
            MethodArg::Genfun => CountMethod::Genfun,
            MethodArg::Auto => CountMethod::Auto,
        }
    }
}

/// Verify, generate, enumerate and count M-partitions.
#[derive(Debug, Parser)]
#[command(name = "mpart", version, arg_required_else_help = true)]
pub struct Cli {
    /// Machine-readable output; text is the default (csv for `table`)
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether the given nondecreasing parts form an M-partition
    Verify {
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<String>,
    },
    /// Build a witness M-partition of m with algorithm 1, 2 or 3
    Gen {
        m: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        alg: u8,
    },
    /// List every M-partition of m in lexicographic order
    Enum {
        m: u64,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Count the M-partitions of m
    Count {
        m: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Print a_m for 1 <= m <= M
    Table { max: usize },
    /// Print b_0..b_J next to the generating-function coefficients
    Series { j: usize },
    /// Run the embedded consistency checks
    Selftest {
        /// Compare against this golden Table 1 file instead of the built-in copy
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

fn parse_positive(s: &str, what: &str) -> CliResult<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::Usage(format!(
            "{what} must be a positive integer, got {s:?}"
        )));
    }
    let v = BigUint::parse_bytes(s.as_bytes(), 10).expect("digits parse");
    if v == BigUint::default() {
        return Err(CliError::Usage(format!("{what} must be positive, got 0")));
    }
    Ok(v)
}

/// Parses raw part arguments; order is checked by [`cmd_verify`].
pub fn parse_parts(args: &[String]) -> CliResult<Vec<BigUint>> {
    if args.is_empty() {
        return Err(CliError::Usage("verify needs at least one part".into()));
    }
    args.iter()
        .map(|s| parse_positive(s, "each part"))
        .collect()
}

/// Reports weak/M-partition status, `m`, `n` and the largest-part bounds.
/// Parts out of order are rejected, never sorted.
pub fn cmd_verify(parts: &[BigUint]) -> CliResult<OutputRecord> {
    let p = Partition::new(parts.to_vec()).map_err(|e| match e {
        Error::Unsorted { .. } | Error::EmptyPartition | Error::ZeroPart { .. } => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Domain(other),
    })?;
    let m = p.total();
    let bounds = largest_part_bounds(m).ok().map(|b| BoundsReport {
        lower: b.lower.into(),
        upper: b.upper.into(),
    });
    Ok(OutputRecord::Verify(VerifyReport {
        parts: ints(p.parts()),
        m: m.into(),
        n: floor_log2(m)?,
        weak: is_weak_m_partition(&p),
        m_partition: is_m_partition(&p),
        bounds,
    }))
}

pub fn cmd_generate(m: &BigUint, algorithm: u8) -> CliResult<OutputRecord> {
    let p = generate(m, algorithm)?;
    Ok(OutputRecord::Generate(GenerateReport {
        m: m.into(),
        algorithm,
        verified: is_m_partition(&p),
        parts: ints(p.parts()),
    }))
}

/// Lists `Mp(m)`, keeping at most `limit` partitions but always counting all.
pub fn cmd_enumerate(m: u64, limit: Option<u64>) -> CliResult<OutputRecord> {
    let mut cursor = EnumerationCursor::new(m).map_err(|e| CliError::Usage(e.to_string()))?;
    let keep = limit.unwrap_or(u64::MAX);
    let mut parts = Vec::new();
    let mut count = 0u64;
    while let Some(p) = cursor.advance() {
        if count < keep {
            parts.push(p.iter().map(|&v| Int::from(v)).collect());
        }
        count += 1;
    }
    Ok(OutputRecord::Enumerate(EnumerateReport {
        m: m.into(),
        parts,
        count: count.into(),
        limit,
    }))
}

/// `auto` uses the generating function on the upper half of a block and the
/// recurrence elsewhere.
pub fn cmd_count(m: usize, method: CountMethod) -> CliResult<OutputRecord> {
    if m == 0 {
        return Err(CliError::Usage("m must be positive, got 0".into()));
    }
    let method = match method {
        CountMethod::Auto if is_upper_half(m) => CountMethod::Genfun,
        CountMethod::Auto => CountMethod::Recurrence,
        other => other,
    };
    let count = match method {
        CountMethod::Recurrence => a(m, &mut CountTable::new())?,
        CountMethod::Enumerate => count_by_enumeration(m as u64)?,
        CountMethod::Genfun => a_via_genfun(m, &mut BinarySeries::new()).map_err(|_| {
            let (lo, hi) = upper_half_window(crate::counting::level(m));
            Error::Domain(format!(
                "the generating function only covers {lo} <= m <= {hi} in this block; \
                 m = {m} lies in the lower part, use --method recurrence"
            ))
        })?,
        CountMethod::Auto => unreachable!("auto resolved above"),
    };
    Ok(OutputRecord::Count(CountReport {
        m: m.into(),
        count: count.into(),
        method,
    }))
}

pub fn cmd_table(max_m: usize) -> CliResult<OutputRecord> {
    if max_m == 0 {
        return Err(CliError::Usage("M must be positive, got 0".into()));
    }
    let table = build_table(max_m);
    Ok(OutputRecord::Table(TableReport {
        rows: table
            .rows()
            .map(|(m, v)| TableRow {
                m: m as u64,
                a_m: v.into(),
            })
            .collect(),
    }))
}

pub fn cmd_series(j: usize) -> CliResult<OutputRecord> {
    let mut series = BinarySeries::new();
    series.extend_to(j);
    let coeffs = gf_coefficients(j);
    let rows: Vec<SeriesRow> = series.terms()[..=j]
        .iter()
        .zip(&coeffs)
        .enumerate()
        .map(|(i, (b, c))| SeriesRow {
            j: i as u64,
            b: b.into(),
            coeff: c.into(),
        })
        .collect();
    let matches = rows.iter().map(|r| r.b == r.coeff).collect();
    Ok(OutputRecord::Series(SeriesReport { rows, matches }))
}

fn group(name: &str, failures: Vec<String>, ok_detail: String) -> GroupResult {
    let passed = failures.is_empty();
    GroupResult {
        name: name.to_string(),
        passed,
        detail: if passed {
            ok_detail
        } else {
            failures.join("; ")
        },
    }
}

/// Table 1 reproduction, recurrence against enumeration for `m ≤ 256`, and
/// the series bridge for `j ≤ 512`.
pub fn cmd_selftest(golden: &str) -> CliResult<OutputRecord> {
    let mut groups = Vec::new();

    let produced = cmd_table(64)?.to_csv().expect("table renders as csv");
    let mut failures = Vec::new();
    if produced != golden {
        let diff = produced
            .lines()
            .zip(golden.lines())
            .find(|(x, y)| x != y)
            .map(|(x, y)| format!("computed {x:?}, golden {y:?}"))
            .unwrap_or_else(|| "line count differs".into());
        failures.push(format!("table 64 differs from golden file: {diff}"));
    }
    groups.push(group("table1", failures, "64 rows match".into()));

    let mut table = build_table(256);
    let mut failures = Vec::new();
    for m in 1..=256usize {
        let by_recurrence = a(m, &mut table)?;
        let by_enumeration = count_by_enumeration(m as u64)?;
        if by_recurrence != by_enumeration {
            failures.push(format!("m = {m}: {by_recurrence} vs {by_enumeration}"));
        }
    }
    groups.push(group(
        "recurrence-vs-enumeration",
        failures,
        "1 <= m <= 256 agree".into(),
    ));

    let OutputRecord::Series(series) = cmd_series(512)? else {
        unreachable!()
    };
    let failures = series
        .matches
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(j, _)| format!("j = {j}"))
        .collect();
    groups.push(group(
        "series-bridge",
        failures,
        "0 <= j <= 512 agree".into(),
    ));

    let passed = groups.iter().all(|g| g.passed);
    let record = OutputRecord::Selftest(SelftestReport { groups, passed });
    if passed {
        Ok(record)
    } else {
        Err(CliError::SelftestFailed(record))
    }
}

fn format_for(command: &Command, requested: Option<FormatArg>) -> CliResult<Format> {
    Ok(match (requested, command) {
        (Some(FormatArg::Json), _) => Format::Json,
        (Some(FormatArg::Csv), Command::Table { .. } | Command::Series { .. }) => Format::Csv,
        (Some(FormatArg::Csv), _) => {
            return Err(CliError::Usage(
                "--format csv is only available for table and series".into(),
            ))
        }
        (None, Command::Table { .. }) => Format::Csv,
        (None, _) => Format::Text,
    })
}

fn dispatch(command: &Command) -> CliResult<OutputRecord> {
    match command {
        Command::Verify { parts } => cmd_verify(&parse_parts(parts)?),
        Command::Gen { m, alg } => cmd_generate(&parse_positive(m, "m")?, *alg),
        Command::Enum { m, limit } => cmd_enumerate(*m, *limit),
        Command::Count { m, method } => cmd_count(*m, (*method).into()),
        Command::Table { max } => cmd_table(*max),
        Command::Series { j } => cmd_series(*j),
        Command::Selftest { golden } => {
            let text = match golden {
                Some(path) => std::fs::read_to_string(path)?,
                None => TABLE1_GOLDEN.to_string(),
            };
            cmd_selftest(&text)
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = format_for(&cli.command, cli.format)
        .and_then(|format| dispatch(&cli.command).map(|r| (format, r)));
    match outcome {
        Ok((format, record)) => {
            let text = record
                .render(format)
                .expect("format checked against command");
            match stdout.write_all(text.as_bytes()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    1
                }
            }
        }
        Err(CliError::SelftestFailed(record)) => {
            let format = format_for(&cli.command, cli.format).unwrap_or(Format::Text);
            let _ = stdout.write_all(record.render(format).unwrap_or_default().as_bytes());
            let _ = writeln!(stderr, "error: selftest failed");
            1
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn verify_reports_fields() {
        let parts: Vec<BigUint> = [1, 2, 4, 8, 16, 22].into_iter().map(big).collect();
        let OutputRecord::Verify(r) = cmd_verify(&parts).unwrap() else {
            panic!()
        };
        assert!(r.weak && r.m_partition);
        assert_eq!((r.m, r.n), (53u64.into(), 5));
        let b = r.bounds.unwrap();
        assert_eq!((b.lower, b.upper), (22u64.into(), 27u64.into()));
    }

    #[test]
    fn verify_rejects_unsorted_as_usage() {
        let err = cmd_verify(&[big(3), big(1)]).unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
        assert!(err.to_string().contains("nondecreasing"));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn parse_parts_rejects_garbage() {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert!(parse_parts(&s(&["1", "0"])).is_err());
        assert!(parse_parts(&s(&["1", "-2"])).is_err());
        assert!(parse_parts(&s(&["1", "x"])).is_err());
        assert!(parse_parts(&[]).is_err());
        assert_eq!(parse_parts(&s(&["1", "2"])).unwrap(), vec![big(1), big(2)]);
    }

    #[test]
    fn count_auto_picks_method() {
        let OutputRecord::Count(r) = cmd_count(25, CountMethod::Auto).unwrap() else {
            panic!()
        };
        assert_eq!((r.count, r.method), (6u64.into(), CountMethod::Genfun));
        let OutputRecord::Count(r) = cmd_count(16, CountMethod::Auto).unwrap() else {
            panic!()
        };
        assert_eq!((r.count, r.method), (12u64.into(), CountMethod::Recurrence));
        let err = cmd_count(16, CountMethod::Genfun).unwrap_err();
        assert!(err.to_string().contains("23 <= m <= 31"), "{err}");
    }

    #[test]
    fn selftest_passes_with_builtin_golden() {
        assert!(cmd_selftest(TABLE1_GOLDEN).is_ok());
    }
}
