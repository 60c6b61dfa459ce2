//! `vample`: classify divisors `aT + bf` on `P(E)` over an elliptic curve.

mod render;

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use vample::{classify_very_ample, Bundle, Divisor, Error, Verdict};

/// Set to any value to evaluate `table` cells on one thread.
const NO_PARALLEL_ENV: &str = "VAMPLE_NO_PARALLEL";

#[derive(Parser)]
#[command(
    name = "vample",
    version,
    about = "Positivity of divisors on projective bundles over an elliptic curve"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Very ampleness verdict with every rule firing.
    Classify(Request),
    /// Slopes, Harder-Narasimhan stages, degree, h0 and all verdicts.
    Invariants(Request),
    /// Very ampleness over a grid of (a, b).
    Table(Request),
    /// The rule catalog with guards, conditions and anchors.
    Rules {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct Request {
    /// Summands as `rank:degree`, comma separated, e.g. `1:2,2:3`.
    #[arg(long, value_parser = parse_bundle, allow_hyphen_values = true)]
    bundle: Bundle,
    /// Coefficient of T: an integer or an inclusive range `lo..hi`.
    #[arg(long, allow_hyphen_values = true)]
    a: Span,
    /// Degree of B: an integer or an inclusive range `lo..hi`.
    #[arg(long, allow_hyphen_values = true)]
    b: Span,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Inclusive integer interval; a single value is `n..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Span {
    lo: i64,
    hi: i64,
}

impl Span {
    fn single(&self) -> Option<i64> {
        (self.lo == self.hi).then_some(self.lo)
    }

    fn values(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("{t:?} is not an integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (int(lo)?, int(hi)?),
            None => {
                let n = int(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span { lo, hi })
    }
}

fn parse_bundle(s: &str) -> Result<Bundle, String> {
    s.parse().map_err(|e: vample::ParseError| e.to_string())
}

/// Failures after argument parsing, with their exit codes.
enum Failure {
    Usage(String),
    Domain(Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(Error::Contradiction { .. }) => 1,
            Failure::Domain(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "usage error: {msg}"),
            Failure::Domain(e @ Error::Contradiction { .. }) => write!(f, "internal error: {e}"),
            Failure::Domain(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn single_divisor(req: &Request) -> Result<Divisor, Failure> {
    match (req.a.single(), req.b.single()) {
        (Some(a), Some(b)) => Ok(Divisor::new(a, b)),
        _ => Err(Failure::Usage(
            "this subcommand takes a single a and b; use `table` for ranges".into(),
        )),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Classify(req) => {
            let div = single_divisor(&req)?;
            let verdict = classify_very_ample(&req.bundle, div)?;
            Ok(match req.format {
                Format::Text => render::verdict_text(&req.bundle, div, &verdict),
                Format::Json => render::json(&verdict),
                Format::Csv => render::table_csv(&[render::Row::new(div, &verdict)]),
            })
        }
        Command::Invariants(req) => {
            let div = single_divisor(&req)?;
            let report = render::Invariants::compute(&req.bundle, div)?;
            match req.format {
                Format::Json => Ok(render::json(&report)),
                Format::Text => Ok(report.text()),
                Format::Csv => Err(Failure::Usage("invariants has no csv form".into())),
            }
        }
        Command::Table(req) => {
            let cells: Vec<Divisor> = req
                .a
                .values()
                .flat_map(|a| req.b.values().map(move |b| Divisor::new(a, b)))
                .collect();
            let classify = |&div: &Divisor| {
                classify_very_ample(&req.bundle, div).map(|v: Verdict| render::Row::new(div, &v))
            };
            let rows: Vec<render::Row> = if std::env::var_os(NO_PARALLEL_ENV).is_some() {
                cells.iter().map(classify).collect::<Result<_, _>>()?
            } else {
                cells.par_iter().map(classify).collect::<Result<_, _>>()?
            };
            Ok(match req.format {
                Format::Text => render::table_text(&rows),
                Format::Json => render::json(&rows),
                Format::Csv => render::table_csv(&rows),
            })
        }
        Command::Rules { format } => match format {
            Format::Json => Ok(render::json(&vample::criteria::CATALOG)),
            Format::Text => Ok(render::rules_text()),
            Format::Csv => Err(Failure::Usage("rules has no csv form".into())),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("3".parse::<Span>().unwrap(), Span { lo: 3, hi: 3 });
        assert_eq!("-2..4".parse::<Span>().unwrap(), Span { lo: -2, hi: 4 });
        assert_eq!("-5..-5".parse::<Span>().unwrap().single(), Some(-5));
        assert!("4..2".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
        assert!("1..".parse::<Span>().is_err());
    }

    #[test]
    fn command_line_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
