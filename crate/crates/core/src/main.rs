use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ivbfwn::io::{self, DocumentError, ReportFormat};
use ivbfwn::{set_algebra, trace, Evaluation, OperatorChoice, RawNumber};

const EXIT_INVALID: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ivbfwn",
    version,
    about = "Rank alternatives with IVBFWN decision matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Operator {
    Average,
    Geometric,
}

impl From<Operator> for OperatorChoice {
    fn from(o: Operator) -> Self {
        match o {
            Operator::Average => OperatorChoice::Average,
            Operator::Geometric => OperatorChoice::Geometric,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Table => ReportFormat::Table,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SetOp {
    Union,
    Intersection,
    Complement,
}

#[derive(clap::Args)]
struct Display {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Decimal places in table output.
    #[arg(long, env = "IVBFWN_PRECISION", default_value_t = 4,
          value_parser = clap::value_parser!(u8).range(0..=io::MAX_PRECISION as i64))]
    precision: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Check a decision matrix and report every violation.
    Validate { file: PathBuf },
    /// Aggregate each row and rank the alternatives.
    Rank {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "average")]
        operator: Operator,
        #[command(flatten)]
        display: Display,
        /// Include every pairwise comparison.
        #[arg(long)]
        trace: bool,
    },
    /// Aggregate a single row of a decision matrix.
    Aggregate {
        file: PathBuf,
        #[arg(long)]
        row: String,
        #[arg(long, value_enum, default_value = "average")]
        operator: Operator,
        #[command(flatten)]
        display: Display,
    },
    /// Score, accuracy and certainty of one element of a set file.
    Score {
        file: PathBuf,
        #[arg(long)]
        element: String,
        #[command(flatten)]
        display: Display,
    },
    /// Union, intersection or complement of set files.
    Setop {
        #[arg(value_enum)]
        op: SetOp,
        file_a: PathBuf,
        file_b: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let mut message = e.to_string();
        if let DocumentError::Invalid(ivbfwn::Error::Validation(violations)) = &e {
            for v in violations {
                message.push_str(&format!("\n  {v}"));
            }
        }
        Failure {
            code: EXIT_INVALID,
            message,
        }
    }
}

impl From<ivbfwn::Error> for Failure {
    fn from(e: ivbfwn::Error) -> Self {
        DocumentError::Invalid(e).into()
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    })
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Validate { file } => {
            let m = io::parse_matrix(&read(&file)?)?;
            Ok(format!(
                "valid: {} alternatives x {} criteria\n",
                m.alternatives().len(),
                m.criteria().len()
            ))
        }
        Command::Rank {
            file,
            operator,
            display,
            trace: with_trace,
        } => {
            let m = io::parse_matrix(&read(&file)?)?;
            let t = trace(&m, operator.into())?;
            let (format, precision) = (display.format.into(), usize::from(display.precision));
            Ok(if with_trace {
                io::emit_trace(&t, format, precision)
            } else {
                io::emit_report(&t.report(), format, precision)
            })
        }
        Command::Aggregate {
            file,
            row,
            operator,
            display,
        } => {
            let m = io::parse_matrix(&read(&file)?)?;
            let i = m
                .alternative_index(&row)
                .ok_or_else(|| Failure::usage(format!("unknown alternative `{row}`")))?;
            let a = OperatorChoice::from(operator).apply(m.row(i))?;
            Ok(match display.format {
                Format::Json => json_line(&RawNumber::from(&a)),
                Format::Table => format!(
                    "{row}: {}\n",
                    io::format_number(&a, display.precision.into())
                ),
            })
        }
        Command::Score {
            file,
            element,
            display,
        } => {
            let s = io::parse_set(&read(&file)?)?;
            let a = s
                .get(&element)
                .ok_or_else(|| Failure::usage(format!("unknown element `{element}`")))?;
            let e = Evaluation::of(a);
            Ok(match display.format {
                Format::Json => json_line(&serde_json::json!({
                    "score": e.score,
                    "accuracy": e.accuracy,
                    "certainty": e.certainty,
                })),
                Format::Table => {
                    let p = usize::from(display.precision);
                    format!(
                        "score: {}\naccuracy: {}\ncertainty: {}\n",
                        io::format_decimal(e.score, p),
                        io::format_decimal(e.accuracy, p),
                        io::format_decimal(e.certainty, p)
                    )
                }
            })
        }
        Command::Setop { op, file_a, file_b } => {
            let a = io::parse_set(&read(&file_a)?)?;
            let result = match (op, file_b) {
                (SetOp::Complement, None) => set_algebra::complement(&a),
                (SetOp::Complement, Some(_)) => {
                    return Err(Failure::usage("complement takes exactly one set file"))
                }
                (_, None) => {
                    return Err(Failure::usage("union and intersection take two set files"))
                }
                (SetOp::Union, Some(b)) => set_algebra::union(&a, &io::parse_set(&read(&b)?)?)?,
                (SetOp::Intersection, Some(b)) => {
                    set_algebra::intersection(&a, &io::parse_set(&read(&b)?)?)?
                }
            };
            let mut out = io::serialize_set(&result);
            out.push('\n');
            Ok(out)
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
