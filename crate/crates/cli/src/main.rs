mod render;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tspread::graphs::Graph;
use tspread::ideals::{alexander_dual, ft_vector};
use tspread::io::{ideal_to_json, parse_graph, parse_ideal};
use tspread::report::{bounds_report, graph_report, invariants_report};
use tspread::resolutions::{betti_table_with_limit, taylor_complex, Subject, DEFAULT_ORACLE_MAX_N};
use tspread::tspread::{
    format_polynomial, hilbert_series_ci, pascal_ft_vector, pascal_ideal, pascal_report, pascal_tlex, TlexOutcome,
};
use tspread::MonomialIdeal;

use render::Format;

#[derive(Parser)]
#[command(name = "tspread", version, about = "Betti numbers, bounds and Pascal ideals for t-spread monomial ideals")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Lift the ambient-size guard on the Betti oracle (may be slow)
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds and exact pd, reg, depth and graded Betti numbers
    Invariants {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Support index, bcos, cosize and the bounds they give
    Bounds {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Graded Betti numbers of S/I
    Betti {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Shifts of the Taylor complex
    Taylor {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Pascal ideal of type (n, t)
    Pascal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
    },
    /// t-spread lexsegment ideal with the f_t-vector of Pascal(n, t)
    Tlex {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
    },
    /// f_t-vector of an ideal
    Ftvector {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Hilbert series of S/I for a complete intersection
    Hilbert {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Edge ideal, induced matching number and regularity of a graph
    EdgeIdeal {
        /// `{"n":6,"edges":[[1,4],[2,5]]}` or `1-4,2-5`
        input: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Alexander dual
    Dual {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Check every worked example, optionally followed by random property checks
    Reproduce {
        #[arg(long)]
        fuzz: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Args)]
struct IdealInput {
    /// `{"n":11,"generators":[[2,4],[1,5,7]]}` or `x2*x4, x1*x5*x7`
    input: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    /// Ambient number of variables
    #[arg(long)]
    n: Option<u32>,
    /// Use the Pascal ideal of type (n, t) instead of an explicit ideal
    #[arg(long)]
    pascal_t: Option<u32>,
}

/// A failure with its exit code: 2 for unreadable input, 1 for everything else.
pub struct Failure {
    code: u8,
    message: String,
}

impl From<tspread::Error> for Failure {
    fn from(e: tspread::Error) -> Self {
        Failure {
            code: if e.is_parse_error() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read_source(input: &Option<String>, file: &Option<PathBuf>) -> Result<String, Failure> {
    match (input, file) {
        (Some(_), Some(_)) => Err(usage("give either an inline input or --file, not both")),
        (Some(text), None) => Ok(text.clone()),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| Failure {
            code: 1,
            message: format!("cannot read {}: {e}", path.display()),
        }),
        (None, None) => Err(usage("missing input: pass it inline or with --file")),
    }
}

impl IdealInput {
    fn load(&self) -> Result<MonomialIdeal, Failure> {
        if let Some(t) = self.pascal_t {
            if self.input.is_some() || self.file.is_some() {
                return Err(usage("--pascal-t cannot be combined with an explicit ideal"));
            }
            let n = self.n.ok_or_else(|| usage("--pascal-t needs --n"))?;
            return Ok(pascal_ideal(n, t)?.ideal);
        }
        let text = read_source(&self.input, &self.file)?;
        Ok(parse_ideal(&text, self.n)?)
    }
}

fn oracle_limit(force: bool) -> Result<u32, Failure> {
    if force {
        return Ok(tspread::monomials::MAX_VARS);
    }
    match std::env::var("TSPREAD_MAX_N") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| usage(format!("TSPREAD_MAX_N: `{raw}` is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_ORACLE_MAX_N),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Output text and whether every check it reports passed.
fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let format = cli.format;
    let max_n = oracle_limit(cli.force)?;
    let out = match cli.command {
        Command::Invariants { input, t } => {
            let ideal = input.load()?;
            let report = invariants_report(&ideal, t, max_n)?;
            match format {
                Format::Json => render::json(&to_value(&report)),
                Format::Table => {
                    let mut value = to_value(&report);
                    value.as_object_mut().map(|m| m.remove("betti"));
                    format!("{}\nBetti diagram of S/I:\n{}", render::table(&value), report.betti.diagram())
                }
            }
        }
        Command::Bounds { input, t } => render::emit(format, &to_value(&bounds_report(&input.load()?, t)?)),
        Command::Betti { input } => {
            let ideal = input.load()?;
            let quotient = betti_table_with_limit(&ideal, max_n)?;
            match format {
                Format::Table => quotient.diagram(),
                Format::Json => render::json(&json!({
                    "ideal": quotient.convert(Subject::Ideal),
                    "quotient": quotient,
                    "extremal": quotient.extremal().into_iter().map(|((i, j), v)| [i as u64, j as u64, v]).collect::<Vec<_>>(),
                })),
            }
        }
        Command::Taylor { input } => {
            let complex = taylor_complex(&input.load()?)?;
            let steps: Vec<Vec<usize>> = (0..complex.len()).map(|i| complex.degrees(i)).collect();
            match format {
                Format::Json => render::json(&json!({ "steps": steps })),
                Format::Table => render::steps(&steps),
            }
        }
        Command::Pascal { n, t } => render::emit(format, &to_value(&pascal_report(n, t)?)),
        Command::Tlex { n, t } => {
            let value = match pascal_tlex(n, t)? {
                TlexOutcome::Exists(l) => json!({
                    "exists": true,
                    "generators": l.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "ft_vector": pascal_ft_vector(n, t)?.by_degree,
                }),
                TlexOutcome::Absent { discrepancy, residue } => json!({
                    "exists": false,
                    "shadow_size": discrepancy,
                    "residue": residue,
                }),
            };
            render::emit(format, &value)
        }
        Command::Ftvector { input, t } => {
            let spread = t.or(input.pascal_t).ok_or_else(|| usage("ftvector needs --t"))?;
            let ideal = input.load()?;
            render::emit(format, &to_value(&ft_vector(&ideal, spread)?))
        }
        Command::Hilbert { input } => {
            let ideal = input.load()?;
            let series = hilbert_series_ci(&ideal)?;
            let reduced = series.normalized();
            let value = json!({
                "numerator": series.numerator,
                "denominator_exponent": series.denominator_exponent,
                "series": format!("({}) / (1 - z)^{}", format_polynomial(&series.numerator), series.denominator_exponent),
                "reduced_numerator": reduced.numerator,
                "reduced_denominator_exponent": reduced.denominator_exponent,
                "hilbert_function": series.hilbert_function(ideal.n() as usize).iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            render::emit(format, &value)
        }
        Command::EdgeIdeal { input, file, n } => {
            let graph: Graph = parse_graph(&read_source(&input, &file)?, n)?;
            render::emit(format, &to_value(&graph_report(&graph, max_n)?))
        }
        Command::Dual { input } => {
            let dual = alexander_dual(&input.load()?)?;
            match format {
                Format::Json => render::json(&to_value(&ideal_to_json(&dual))),
                Format::Table => format!("{dual}\n"),
            }
        }
        Command::Reproduce { fuzz, seed, samples } => return Ok(reproduce::run(fuzz.then_some((seed, samples)))),
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
