//! Command-line front end.
//!
//! Exit codes: 0 when everything holds, 1 when an identity or comparison
//! fails, 2 on usage errors.

mod format;
mod table;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde::Serialize;

pub use format::{parse_record, DecodeError, JsonRecord, JsonScalar, JsonValue, OutputFormat};
pub use table::{
    misprint, render_table, table_cells, table_family, Misprint, TableCell, KNOWN_MISPRINTS,
};

use crate::error::Error;
use crate::identities::suites::{run_suite, Cell, GridConfig, Suite, SuiteOutcome};
use crate::identities::{expand_rational_series, genfunc_denominator, genfunc_numerator};
use crate::sequences::{self, seq_stream, FamilyTag, Term};
use format::{to_csv, to_json, to_plain_grid};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kmersenne",
    version,
    about = "Exact Mersenne-family sequences and identity checks"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
    /// Upper bound of the n range (table rows, suite grids)
    #[arg(long, global = true)]
    pub n_max: Option<u64>,
    /// Upper bound of the k range
    #[arg(long, global = true)]
    pub k_max: Option<u64>,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the T(n; k) grid: 1 = M, 2 = MP, 3 = GM, 4 = GMP
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
    },
    /// Print one term, or with --range every term up to n
    Seq {
        family: FamilyTag,
        n: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long)]
        range: bool,
    },
    /// Run identity suites over their parameter grids
    Verify {
        /// Suite name or "all"
        suite: String,
        #[arg(long)]
        family: Option<FamilyTag>,
    },
    /// Expand a generating function and compare it with the sequence
    Series { family: FamilyTag, count: u64 },
    /// Time closed-form Mersenne evaluation against the recurrence
    Bench {
        #[arg(required = true)]
        n: Vec<u64>,
        /// Skip the recurrence above this index
        #[arg(long, default_value_t = 100_000)]
        oracle_cutoff: u64,
    },
}

/// Rendered output plus its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn pass(text: String) -> Self {
        Output {
            text,
            code: EXIT_PASS,
        }
    }

    fn verdict(text: String, ok: bool) -> Self {
        Output {
            text,
            code: if ok { EXIT_PASS } else { EXIT_FAIL },
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// output. Returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &output.text)
                    .map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", output.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => output.code,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs a parsed command without touching stdout.
pub fn execute(cli: &Cli) -> Result<Output, Error> {
    let fmt = cli.format;
    match &cli.command {
        Command::Table { id } => {
            render_table(*id, cli.n_max.unwrap_or(5), cli.k_max.unwrap_or(5), fmt).map(Output::pass)
        }
        Command::Seq {
            family,
            n,
            k,
            range,
        } => cmd_seq(*family, *n, *k, *range, fmt).map(Output::pass),
        Command::Verify { suite, family } => {
            let config = GridConfig {
                family: *family,
                n_max: cli.n_max,
                k_max: cli.k_max,
            };
            cmd_verify(suite, &config, fmt)
        }
        Command::Series { family, count } => cmd_series(*family, *count, fmt),
        Command::Bench { n, oracle_cutoff } => cmd_bench(n, *oracle_cutoff, fmt),
    }
}

fn records_output(
    records: Vec<(u64, Term)>,
    family: FamilyTag,
    k: u64,
    fmt: OutputFormat,
    single: bool,
) -> String {
    match fmt {
        OutputFormat::Plain if single => format!("{}\n", records[0].1),
        OutputFormat::Plain => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|(n, t)| vec![n.to_string(), t.to_string()])
                .collect();
            to_plain_grid(&rows)
        }
        OutputFormat::Csv => to_csv(
            &["family", "n", "k", "value"],
            records.iter().map(|(n, t)| {
                [
                    family.to_string(),
                    n.to_string(),
                    k.to_string(),
                    t.to_string(),
                ]
            }),
        ),
        OutputFormat::Json => {
            let json: Vec<JsonRecord> = records
                .iter()
                .map(|(n, t)| JsonRecord::new(family, *n, k, t))
                .collect();
            if single {
                to_json(&json[0])
            } else {
                to_json(&json)
            }
        }
    }
}

fn cmd_seq(
    family: FamilyTag,
    n: u64,
    k: u64,
    range: bool,
    fmt: OutputFormat,
) -> Result<String, Error> {
    let records: Vec<(u64, Term)> = if range {
        (0..)
            .zip(seq_stream(
                family,
                n.checked_add(1).ok_or(Error::IndexTooLarge {
                    index: n,
                    max: sequences::MAX_INDEX,
                })?,
                k,
            )?)
            .collect()
    } else {
        vec![(n, family.term(n, k)?)]
    };
    Ok(records_output(records, family, k, fmt, !range))
}

#[derive(Serialize)]
struct SuiteSummary {
    suite: &'static str,
    total: usize,
    passed: usize,
    first_failure: Option<String>,
}

fn describe(cell: &Cell) -> String {
    match cell {
        Cell::Identity(r) => {
            let params: Vec<String> = r
                .parameters
                .iter()
                .map(|(p, v)| format!("{p}={v}"))
                .collect();
            let family = r.family.map(|f| format!("{f} ")).unwrap_or_default();
            format!(
                "{} {family}[{}] {}: lhs={} rhs={} residual={}",
                r.identity,
                params.join(" "),
                r.orientation,
                r.lhs,
                r.rhs,
                r.residual()
            )
        }
        Cell::Binet(b) => format!(
            "binet n={} x0={}: rel errors {:e} (M), {:e} (GM)",
            b.n, b.x0, b.mersenne_rel_error, b.gaussian_rel_error
        ),
    }
}

fn summarize(outcome: &SuiteOutcome) -> SuiteSummary {
    SuiteSummary {
        suite: outcome.suite.name(),
        total: outcome.total(),
        passed: outcome.passed(),
        first_failure: outcome.first_failure().map(describe),
    }
}

fn cmd_verify(suite: &str, config: &GridConfig, fmt: OutputFormat) -> Result<Output, Error> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite
            .parse()
            .map_err(|_| Error::UnknownSuite(suite.to_string()))?]
    };
    let mut summaries = Vec::new();
    for s in suites {
        // an explicit family only applies to suites that define it
        if suite == "all" {
            if let Some(f) = config.family {
                if !s.families().contains(&f) {
                    continue;
                }
            }
        }
        summaries.push(summarize(&run_suite(s, config)?));
    }
    let ok = summaries.iter().all(|s| s.passed == s.total);
    let text = match fmt {
        OutputFormat::Plain => {
            let mut out = String::new();
            for s in &summaries {
                let verdict = if s.passed == s.total { "pass" } else { "FAIL" };
                let _ = writeln!(out, "{}: {}/{} {verdict}", s.suite, s.passed, s.total);
                if let Some(failure) = &s.first_failure {
                    let _ = writeln!(out, "  first failure: {failure}");
                }
            }
            out
        }
        OutputFormat::Csv => to_csv(
            &["suite", "total", "passed", "first_failure"],
            summaries.iter().map(|s| {
                [
                    s.suite.to_string(),
                    s.total.to_string(),
                    s.passed.to_string(),
                    s.first_failure.clone().unwrap_or_default(),
                ]
            }),
        ),
        OutputFormat::Json => to_json(&summaries),
    };
    Ok(Output::verdict(text, ok))
}

#[derive(Serialize)]
struct SeriesReport {
    family: String,
    matches: bool,
    coefficients: Vec<JsonRecord>,
}

fn cmd_series(family: FamilyTag, count: u64, fmt: OutputFormat) -> Result<Output, Error> {
    if count < 1 {
        return Err(Error::BelowMinimum {
            name: "count",
            value: count,
            min: 1,
        });
    }
    let series = expand_rational_series(
        &genfunc_numerator(family)?,
        &genfunc_denominator(),
        count as usize,
    )?;
    let expected: Vec<Term> = seq_stream(family, count, 1)?.collect();
    let matches =
        series.coefficients.iter().zip(&expected).all(|(c, t)| {
            crate::arith::GaussianPolynomial::constant(c.clone()) == t.to_polynomial()
        });
    let terms: Vec<Term> = series
        .coefficients
        .iter()
        .map(|c| match (family, c.as_integer()) {
            (FamilyTag::M, Some(v)) => Term::Integer(v.clone()),
            _ => Term::Gaussian(c.clone()),
        })
        .collect();
    let status = if matches { "match" } else { "MISMATCH" };
    let text = match fmt {
        OutputFormat::Plain => {
            let values: Vec<String> = terms.iter().map(Term::to_string).collect();
            format!("{} ({status})\n", values.join(" "))
        }
        OutputFormat::Csv => to_csv(
            &["family", "j", "coefficient", "sequence", "match"],
            terms.iter().zip(&expected).enumerate().map(|(j, (c, t))| {
                [
                    family.to_string(),
                    j.to_string(),
                    c.to_string(),
                    t.to_string(),
                    (c.to_polynomial() == t.to_polynomial()).to_string(),
                ]
            }),
        ),
        OutputFormat::Json => to_json(&SeriesReport {
            family: family.to_string(),
            matches,
            coefficients: (0..)
                .zip(&terms)
                .map(|(j, t)| JsonRecord::new(family, j, 1, t))
                .collect(),
        }),
    };
    Ok(Output::verdict(text, matches))
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: u64,
    pub bits: u64,
    pub closed_form_secs: f64,
    pub oracle_secs: Option<f64>,
    pub equal: Option<bool>,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

/// Times `mersenne(n)` and, up to `oracle_cutoff`, `mersenne_oracle(n)`.
pub fn bench_row(n: u64, oracle_cutoff: u64) -> Result<BenchRow, Error> {
    let (fast, fast_time) = timed(|| sequences::mersenne(n));
    let fast = fast?;
    let (oracle_secs, equal) = if n <= oracle_cutoff {
        let (slow, slow_time) = timed(|| sequences::mersenne_oracle(n));
        (Some(slow_time.as_secs_f64()), Some(slow? == fast))
    } else {
        (None, None)
    };
    Ok(BenchRow {
        n,
        bits: fast.bits(),
        closed_form_secs: fast_time.as_secs_f64(),
        oracle_secs,
        equal,
    })
}

fn cmd_bench(ns: &[u64], oracle_cutoff: u64, fmt: OutputFormat) -> Result<Output, Error> {
    let rows = ns
        .iter()
        .map(|&n| bench_row(n, oracle_cutoff))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = rows.iter().all(|r| r.equal != Some(false));
    let cells = |r: &BenchRow| {
        [
            r.n.to_string(),
            r.bits.to_string(),
            format!("{:.6}", r.closed_form_secs),
            r.oracle_secs
                .map(|s| format!("{s:.6}"))
                .unwrap_or_else(|| "skipped".into()),
            r.equal.map(|e| e.to_string()).unwrap_or_else(|| "-".into()),
        ]
    };
    let header = ["n", "bits", "closed_form_s", "oracle_s", "equal"];
    let text = match fmt {
        OutputFormat::Plain => {
            let mut grid = vec![header.iter().map(|h| h.to_string()).collect::<Vec<_>>()];
            grid.extend(rows.iter().map(|r| cells(r).to_vec()));
            to_plain_grid(&grid)
        }
        OutputFormat::Csv => to_csv(&header, rows.iter().map(cells)),
        OutputFormat::Json => to_json(&rows),
    };
    Ok(Output::verdict(text, ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Output, Error> {
        let cli =
            Cli::try_parse_from(std::iter::once("kmersenne").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    #[test]
    fn seq_examples() {
        assert_eq!(exec(&["seq", "M", "20"]).unwrap().text, "1048575\n");
        assert_eq!(exec(&["seq", "GM", "4"]).unwrap().text, "15+7i\n");
        assert_eq!(exec(&["seq", "MP", "5"]).unwrap().text, "81x^4-54x^2+4\n");
        assert_eq!(exec(&["seq", "M", "5", "--k", "2"]).unwrap().text, "21\n");
    }

    #[test]
    fn series_examples() {
        assert_eq!(
            exec(&["series", "M", "6"]).unwrap().text,
            "0 1 3 7 15 31 (match)\n"
        );
        assert_eq!(
            exec(&["series", "GM", "3"]).unwrap().text,
            "-i/2 1 3+i (match)\n"
        );
        assert_eq!(exec(&["series", "M", "1"]).unwrap().text, "0 (match)\n");
        assert!(exec(&["series", "M", "0"]).is_err());
    }

    #[test]
    fn verify_summary() {
        let out = exec(&["verify", "cassini", "--family", "M", "--n-max", "256"]).unwrap();
        assert_eq!(out.text, "cassini: 256/256 pass\n");
        assert_eq!(out.code, EXIT_PASS);
        assert!(exec(&["verify", "docagne", "--n-max", "0"]).is_err());
        assert!(exec(&["verify", "nonsense"]).is_err());
    }

    #[test]
    fn bench_compares() {
        let row = bench_row(1000, 10).unwrap();
        assert_eq!((row.bits, row.equal), (1000, None));
        let row = bench_row(1000, 1000).unwrap();
        assert_eq!(row.equal, Some(true));
        let row = bench_row(0, 10).unwrap();
        assert_eq!((row.bits, row.equal), (0, Some(true)));
    }

    #[test]
    fn usage_errors_are_rejected_by_the_parser() {
        for args in [&["table", "7"][..], &["bench"], &["seq", "XX", "3"]] {
            let err = Cli::try_parse_from(std::iter::once("kmersenne").chain(args.iter().copied()))
                .unwrap_err();
            assert!(err.use_stderr(), "{args:?}");
        }
    }
}
