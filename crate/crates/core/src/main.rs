//! `twl`: tables, single values, identity verification and series expansion
//! for the Lah, Stirling, Whitney and Whitney-Lah families.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;
use twl_core::arith::{factorial, rat_to_string, ExactRat};
use twl_core::classical::{bell, ClassicalFamily, ClassicalTriangle};
use twl_core::qwhitney::{q_triangle, qdowling, qwl_egf_cleared, QFamily};
use twl_core::verify::{run_suite, Mode, Suite, SuiteConfig};
use twl_core::whitney::{dowling, triangle, twl_egf, WhitneyFamily};
use twl_core::Error;

#[derive(Parser)]
#[command(
    name = "twl",
    version,
    about = "Whitney-Lah number families and their q-analogues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle (or sequence) of values for 0 <= k <= n <= n_max.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Print a single value.
    Eval {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Column index; not used by the sequence families.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        alpha: i64,
    },
    /// Run the identity suite; exits with 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "1,2",
            allow_negative_numbers = true
        )]
        alpha_list: Vec<i64>,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long, default_value = "corrected")]
        mode: Mode,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Compare both sides of a generating-function identity coefficient by
    /// coefficient; exits with 1 on a mismatch.
    Series {
        #[arg(long, value_enum)]
        id: SeriesId,
        #[arg(long, default_value_t = 1)]
        alpha: i64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Lah,
    Stirling1u,
    Stirling2,
    Bell,
    Whitney1,
    Whitney2,
    WhitneyLah,
    Dowling,
    QWhitney1,
    QWhitney2,
    QWhitneyLah,
    QLah,
    QDowling,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesId {
    R3,
    #[value(name = "qr1.1")]
    Qr11,
}

impl Family {
    fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }
}

enum Values {
    Triangle(Vec<Vec<String>>),
    Sequence(Vec<String>),
}

fn strings<T: ToString>(row: &[T]) -> Vec<String> {
    row.iter().map(T::to_string).collect()
}

fn compute(family: Family, alpha: i64, n_max: usize) -> Result<Values, Error> {
    let classical = |f| {
        let t = ClassicalTriangle::build(f, n_max);
        Values::Triangle(t.rows().iter().map(|r| strings(r)).collect())
    };
    let whitney = |f| -> Result<Values, Error> {
        let t = triangle(f, alpha, n_max)?;
        Ok(Values::Triangle(
            t.rows()[..=n_max].iter().map(|r| strings(r)).collect(),
        ))
    };
    let q = |f, alpha| -> Result<Values, Error> {
        let t = q_triangle(f, alpha, n_max)?;
        Ok(Values::Triangle(
            t.rows()[..=n_max].iter().map(|r| strings(r)).collect(),
        ))
    };
    Ok(match family {
        Family::Lah => classical(ClassicalFamily::Lah),
        Family::Stirling1u => classical(ClassicalFamily::Stirling1u),
        Family::Stirling2 => classical(ClassicalFamily::Stirling2),
        Family::Bell => Values::Sequence((0..=n_max).map(|n| bell(n).to_string()).collect()),
        Family::Whitney1 => whitney(WhitneyFamily::First)?,
        Family::Whitney2 => whitney(WhitneyFamily::Second)?,
        Family::WhitneyLah => whitney(WhitneyFamily::Lah)?,
        Family::Dowling => Values::Sequence(
            (0..=n_max)
                .map(|n| dowling(alpha, n).map(|v| v.to_string()))
                .collect::<Result<_, _>>()?,
        ),
        Family::QWhitney1 => q(QFamily::First, alpha)?,
        Family::QWhitney2 => q(QFamily::Second, alpha)?,
        Family::QWhitneyLah => q(QFamily::Lah, alpha)?,
        Family::QLah => q(QFamily::GarsiaRemmel, 1)?,
        Family::QDowling => Values::Sequence(
            (0..=n_max)
                .map(|n| qdowling(alpha, n).map(|v| v.to_string()))
                .collect::<Result<_, _>>()?,
        ),
    })
}

#[derive(Serialize)]
struct TableJson<'a> {
    family: String,
    alpha: i64,
    n_max: usize,
    rows: &'a [Vec<String>],
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn table(family: Family, alpha: i64, n_max: usize, format: TableFormat) -> Result<String, Error> {
    let values = compute(family, alpha, n_max)?;
    Ok(match (values, format) {
        (Values::Triangle(rows), TableFormat::Csv) => csv_string(
            &["n", "k", "value"],
            rows.iter().enumerate().flat_map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(k, v)| vec![n.to_string(), k.to_string(), v.clone()])
            }),
        ),
        (Values::Sequence(seq), TableFormat::Csv) => csv_string(
            &["n", "value"],
            seq.into_iter()
                .enumerate()
                .map(|(n, v)| vec![n.to_string(), v]),
        ),
        (values, TableFormat::Json) => {
            let rows = match values {
                Values::Triangle(rows) => rows,
                Values::Sequence(seq) => seq.into_iter().map(|v| vec![v]).collect(),
            };
            to_json(&TableJson {
                family: family.name(),
                alpha,
                n_max,
                rows: &rows,
            })
        }
    })
}

fn eval(family: Family, n: usize, k: Option<usize>, alpha: i64) -> Result<String, Failure> {
    let value = match compute(family, alpha, n)? {
        Values::Sequence(seq) => seq[n].clone(),
        Values::Triangle(rows) => {
            let k = k.ok_or_else(|| {
                Failure::Usage(format!("--k is required for family {}", family.name()))
            })?;
            rows[n].get(k).cloned().unwrap_or_else(|| "0".into())
        }
    };
    Ok(format!("{value}\n"))
}

#[derive(Serialize)]
struct SeriesJson {
    id: &'static str,
    alpha: i64,
    k: usize,
    order: usize,
    lhs: Vec<String>,
    rhs: Vec<String>,
    #[serde(rename = "match")]
    matched: bool,
}

fn series(
    id: SeriesId,
    alpha: i64,
    k: usize,
    order: usize,
    format: TableFormat,
) -> Result<(String, bool), Error> {
    let (name, lhs, rhs) = match id {
        SeriesId::R3 => {
            let s = twl_egf(alpha, k, order)?;
            let t = triangle(WhitneyFamily::Lah, alpha, order)?;
            let rhs = (0..=order)
                .map(|n| {
                    let v = ExactRat::new(t.get(n, k), factorial(n as u64));
                    rat_to_string(&v)
                })
                .collect();
            ("r3", s.canonical_coeffs(), rhs)
        }
        SeriesId::Qr11 => {
            let (l, r) = qwl_egf_cleared(alpha, k, order)?;
            ("qr1.1", strings(&l), strings(&r))
        }
    };
    let matched = lhs == rhs;
    let out = match format {
        TableFormat::Csv => csv_string(
            &["n", "lhs", "rhs", "match"],
            lhs.iter()
                .zip(&rhs)
                .enumerate()
                .map(|(n, (l, r))| vec![n.to_string(), l.clone(), r.clone(), (l == r).to_string()]),
        ),
        TableFormat::Json => to_json(&SeriesJson {
            id: name,
            alpha,
            k,
            order,
            lhs,
            rhs,
            matched,
        }),
    };
    Ok((out, matched))
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Output text and whether every check it reports on passed.
fn run(command: Command) -> Result<(String, bool), Failure> {
    match command {
        Command::Table {
            family,
            alpha,
            n_max,
            format,
        } => Ok((table(family, alpha, n_max, format)?, true)),
        Command::Eval {
            family,
            n,
            k,
            alpha,
        } => Ok((eval(family, n, k, alpha)?, true)),
        Command::Verify {
            suite,
            alpha_list,
            n_max,
            format,
            mode,
            timing,
        } => {
            if n_max < 1 {
                return Err(Failure::Usage("--n-max must be at least 1".into()));
            }
            if alpha_list.is_empty() || alpha_list.contains(&0) {
                return Err(Failure::Usage(
                    "--alpha-list must hold nonzero integers".into(),
                ));
            }
            let report = run_suite(&SuiteConfig::new(suite, alpha_list, n_max, mode));
            let out = match format {
                ReportFormat::Json => {
                    let mut s = report.to_json(timing);
                    s.push('\n');
                    s
                }
                ReportFormat::Text => report.to_text(timing),
            };
            Ok((out, report.all_passed()))
        }
        Command::Series {
            id,
            alpha,
            k,
            order,
            format,
        } => Ok(series(id, alpha, k, order, format)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli.command) {
        Ok((out, ok)) => {
            // a closed pipe downstream is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
