//! `pythia` command line.
//!
//! Exit codes: 0 on success, 2 when a verification finds a counterexample,
//! 1 on usage, domain or overflow errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::boxes::{
    enumerate_boxes_with_jobs, enumerate_face_diagonal_boxes, equal_edge_boxes_with_jobs,
};
use crate::error::{Error, Result, Violation};
use crate::output::{write_records, BoxRecord, Format, OutputRecord};
use crate::shared_side::FamilyParams;
use crate::triples::{enumerate_triples_with_jobs, params_of, Triple};
use crate::two_square::enumerate_two_two_with_jobs;
use crate::verifier::{self, Claim};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

/// Environment variable that narrows the arithmetic lane (in bits).
pub const WIDTH_ENV: &str = "PYTHIA_MAX_WIDTH";

#[derive(Debug, Parser)]
#[command(
    name = "pythia",
    version,
    about = "Pythagorean triples, boxes and bounded non-existence searches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Jsonl,
    Csv,
    Table,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Jsonl => Format::Jsonl,
            FormatArg::Csv => Format::Csv,
            FormatArg::Table => Format::Table,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate Pythagorean triples with hypotenuse at most N.
    Triples {
        #[arg(long)]
        max_c: u64,
        #[arg(long)]
        primitive: bool,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Canonical (delta, m, n) of a triple.
    Decompose {
        a: u64,
        b: u64,
        c: u64,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Enumerate solutions of x² + 2y² = z² with z at most N.
    TwoSquare {
        #[arg(long)]
        max_z: u64,
        #[arg(long)]
        odd_k_only: bool,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Enumerate Pythagorean boxes with space diagonal at most N.
    Boxes {
        #[arg(long)]
        max_t: u64,
        #[arg(long, conflicts_with = "face_diagonal")]
        equal_edge: bool,
        #[arg(long, requires = "max_param")]
        face_diagonal: bool,
        #[arg(long, requires = "face_diagonal")]
        max_param: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Build a triangle pair from one of the four shared-side families.
    Pairs {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        family: u8,
        #[arg(long = "K")]
        big_k: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long = "M")]
        big_m: Option<u64>,
        #[arg(long = "N")]
        big_n: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Search for counterexamples to a claim up to a bound.
    Verify {
        /// prop1, prop2, result1, result2, result3, theorem1 or theorem2
        #[arg(value_parser = parse_claim)]
        claim: Claim,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn parse_claim(s: &str) -> std::result::Result<Claim, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Applies the `PYTHIA_MAX_WIDTH` setting, if present.
pub fn apply_width_env(value: Option<&str>) -> Result<()> {
    let Some(v) = value else { return Ok(()) };
    let bits = v.trim().parse().map_err(|_| {
        Violation::Unsupported(format!("{WIDTH_ENV} must be an integer, got {v:?}"))
    })?;
    crate::arith::set_lane_bits(bits)
}

/// Runs the command line and returns the process exit code.
pub fn run<I, S, O, E>(argv: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_ERROR
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute<O: Write>(command: Command, out: &mut O) -> Result<i32> {
    let (records, format) = match command {
        Command::Triples {
            max_c,
            primitive,
            format,
            jobs,
        } => (
            enumerate_triples_with_jobs(max_c, primitive, jobs)?
                .into_iter()
                .map(OutputRecord::Triple)
                .collect(),
            format,
        ),
        Command::Decompose { a, b, c, format } => {
            let t = Triple::new(a, b, c)?;
            (vec![OutputRecord::Params(params_of(&t)?)], format)
        }
        Command::TwoSquare {
            max_z,
            odd_k_only,
            format,
            jobs,
        } => (
            enumerate_two_two_with_jobs(max_z, odd_k_only, jobs)?
                .into_iter()
                .map(OutputRecord::TwoTwo)
                .collect(),
            format,
        ),
        Command::Boxes {
            max_t,
            equal_edge,
            face_diagonal,
            max_param,
            format,
            jobs,
        } => {
            let records = if face_diagonal {
                let max_param = max_param.unwrap_or_default();
                enumerate_face_diagonal_boxes(max_param, max_t)?
                    .into_iter()
                    .map(|(shape, d)| OutputRecord::Box(BoxRecord { shape, d: Some(d) }))
                    .collect()
            } else {
                let shapes = if equal_edge {
                    equal_edge_boxes_with_jobs(max_t, jobs)?
                } else {
                    enumerate_boxes_with_jobs(max_t, jobs)?
                };
                shapes
                    .into_iter()
                    .map(|shape| OutputRecord::Box(BoxRecord { shape, d: None }))
                    .collect()
            };
            (records, format)
        }
        Command::Pairs {
            family,
            big_k,
            m,
            n,
            big_m,
            big_n,
            d,
            format,
        } => {
            let need = |v: Option<u64>, flag: &str| {
                v.ok_or_else(|| {
                    Error::from(Violation::Unsupported(format!(
                        "family {family} requires --{flag}"
                    )))
                })
            };
            let params = match family {
                1 => FamilyParams::F1 {
                    big_m: need(big_m, "M")?,
                    big_n: need(big_n, "N")?,
                },
                2 | 3 => {
                    let (k, m, n) = (need(big_k, "K")?, need(m, "m")?, need(n, "n")?);
                    let (big_m, big_n) = (need(big_m, "M")?, need(big_n, "N")?);
                    if family == 2 {
                        FamilyParams::F2 {
                            k,
                            m,
                            n,
                            big_m,
                            big_n,
                        }
                    } else {
                        FamilyParams::F3 {
                            k,
                            m,
                            n,
                            big_m,
                            big_n,
                        }
                    }
                }
                _ => FamilyParams::F4 {
                    d: need(d, "d")?,
                    big_m: need(big_m, "M")?,
                    big_n: need(big_n, "N")?,
                },
            };
            (vec![OutputRecord::Pair(params.generate()?)], format)
        }
        Command::Verify { claim, bound, jobs } => {
            let report = verifier::verify(claim, bound, jobs)?;
            let code = if report.holds() {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            write_records(&[OutputRecord::Report(report)], Format::Jsonl, out)?;
            return Ok(code);
        }
    };
    write_records(&records, format.into(), out)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("pythia").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn width_env_parsing() {
        assert!(apply_width_env(None).is_ok());
        assert!(apply_width_env(Some("abc")).is_err());
        assert!(apply_width_env(Some("3")).is_err());
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify"));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_ERROR);
        assert_eq!(call(&["triples"]).0, EXIT_ERROR);
        assert_eq!(call(&["triples", "--max-c", "x"]).0, EXIT_ERROR);
        assert_eq!(call(&["verify", "prop9", "--bound", "3"]).0, EXIT_ERROR);
        assert_eq!(call(&["pairs", "--family", "5"]).0, EXIT_ERROR);
        let (code, _, err) = call(&["pairs", "--family", "2", "--M", "2", "--N", "1"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("--K"), "{err}");
    }

    #[test]
    fn domain_errors_exit_one() {
        let (code, out, err) = call(&["decompose", "3", "4", "6"]);
        assert_eq!((code, out.as_str()), (EXIT_ERROR, ""));
        assert!(err.contains("a² + b² = c²"));
        assert_eq!(call(&["verify", "prop1", "--bound", "0"]).0, EXIT_ERROR);
        assert_eq!(
            call(&["verify", "prop1", "--bound", "10", "--jobs", "0"]).0,
            EXIT_ERROR
        );
    }
}
