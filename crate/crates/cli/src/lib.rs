//! Command-line front end.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! the text destined for standard output and standard error, so the binary
//! is a thin wrapper and tests can drive every command in-process.
//!
//! Exit codes: 0 on success, 1 when a verification fails (or, with
//! `--strict`, when a semistability search comes back empty), 2 on usage
//! errors.

pub mod cache;
pub mod suite;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use uquot_core::{
    b_semistable, delta_points, hilbert_flag, hilbert_uh, multiplicity, phi, u_inv_basis, u_semistable,
    verify_correspondence, walls, BasisSource, Config, CorrespondenceReport, Direct, HilbertVector, Memo, Multidegree,
    PointTuple, Polynomial, SemistabilityVerdict,
};

use crate::cache::DiskCache;
use crate::suite::parse_suite;

#[derive(Debug, Parser)]
#[command(name = "uquot", version, about = "Exact invariant rings for SL(2) on (P^1)^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory for cached invariant bases.
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,

    /// Exit 1 when a semistability search finds no section.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    U,
    B,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rational points tau/d with a nonzero isotypic piece, and the enclosing interval.
    Polytope {
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..))]
        degrees: Vec<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        dmax: u32,
    },
    /// Wall values inside the interval.
    Walls {
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..))]
        degrees: Vec<u32>,
    },
    /// Hilbert functions of the shifted invariant ring and the flag invariant ring.
    Hilbert {
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Degree-by-degree check of the quotient correspondence.
    Verify {
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Basis of the U-invariants of one multidegree and weight.
    Uinv {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        weight: i64,
    },
    /// Semistability certificate search.
    Sstest {
        #[arg(long, value_enum, ignore_case = true)]
        mode: Mode,
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..))]
        degrees: Vec<u32>,
        #[arg(long, value_parser = parse_point)]
        point: PointTuple,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        dbound: u32,
        #[arg(long, default_value_t = 0)]
        chi: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Image of a point under the unipotent quotient map.
    Phi {
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..))]
        degrees: Vec<u32>,
        #[arg(long, value_parser = parse_point)]
        point: PointTuple,
    },
    /// Runs `verify` on every case of a suite file.
    Suite { path: PathBuf },
}

#[derive(Debug, clap::Args)]
struct ConfigArgs {
    #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..))]
    degrees: Vec<u32>,
    #[arg(long, default_value_t = 0)]
    chi: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    dmax: u32,
}

impl ConfigArgs {
    fn config(&self) -> Result<Config, Failure> {
        Config::new(self.degrees.clone(), self.chi, self.n, self.dmax).map_err(Failure::usage)
    }
}

fn parse_point(s: &str) -> Result<PointTuple, String> {
    s.parse::<PointTuple>().map_err(|e| e.to_string())
}

/// Exit code plus captured output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure {
            code: 2,
            message: format!("error: {e}"),
        }
    }
}

struct Success {
    code: i32,
    json: String,
}

impl Success {
    fn ok<T: Serialize>(value: &T) -> Self {
        Self::with_code(0, value)
    }

    fn with_code<T: Serialize>(code: i32, value: &T) -> Self {
        Success {
            code,
            json: serde_json::to_string(value).expect("report serializes"),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("{}\n", rendered.lines().next().unwrap_or("error: invalid usage")),
                },
            };
        }
    };
    match execute(&cli) {
        Ok(s) => Outcome {
            code: s.code,
            stdout: format!("{}\n", s.json),
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("{}\n", f.message),
        },
    }
}

fn execute(cli: &Cli) -> Result<Success, Failure> {
    match &cli.cache_dir {
        Some(dir) => {
            let source = Memo::new(DiskCache::open(dir).map_err(Failure::usage)?);
            dispatch(cli, &source)
        }
        None => dispatch(cli, &Memo::new(Direct)),
    }
}

#[derive(Serialize)]
struct PolytopeOut {
    degrees: Vec<u32>,
    dmax: u32,
    interval: [String; 2],
    points: Vec<String>,
}

#[derive(Serialize)]
struct WallsOut {
    degrees: Vec<u32>,
    walls: Vec<u64>,
}

#[derive(Serialize)]
struct HilbertOut {
    config: Config,
    #[serde(rename = "hilbert_uH")]
    hilbert_uh: HilbertVector,
    hilbert_flag: HilbertVector,
}

#[derive(Serialize)]
struct UinvOut {
    m: Vec<u32>,
    weight: i64,
    dim: usize,
    multiplicity: u64,
    basis: Vec<Polynomial>,
}

#[derive(Serialize)]
struct PhiOut {
    image: Vec<String>,
}

#[derive(Serialize)]
struct SuiteCaseOut {
    name: String,
    #[serde(flatten)]
    report: CorrespondenceReport,
}

#[derive(Serialize)]
struct SuiteOut {
    pass: bool,
    cases: usize,
    results: Vec<SuiteCaseOut>,
}

fn dispatch<S: BasisSource>(cli: &Cli, src: &S) -> Result<Success, Failure> {
    match &cli.command {
        Command::Polytope { degrees, dmax } => {
            let data = delta_points(degrees, *dmax).map_err(Failure::usage)?;
            Ok(Success::ok(&PolytopeOut {
                degrees: degrees.clone(),
                dmax: *dmax,
                interval: [data.lo.to_string(), data.hi.to_string()],
                points: data.points.iter().map(ToString::to_string).collect(),
            }))
        }
        Command::Walls { degrees } => Ok(Success::ok(&WallsOut {
            degrees: degrees.clone(),
            walls: walls(degrees),
        })),
        Command::Hilbert { cfg } => {
            let config = cfg.config()?;
            let out = HilbertOut {
                hilbert_uh: hilbert_uh(&config),
                hilbert_flag: hilbert_flag(src, &config).map_err(Failure::usage)?,
                config,
            };
            Ok(Success::ok(&out))
        }
        Command::Verify { cfg } => {
            let config = cfg.config()?;
            let report = verify_correspondence(src, &config).map_err(Failure::usage)?;
            Ok(Success::with_code(if report.pass { 0 } else { 1 }, &report))
        }
        Command::Uinv { degrees, weight } => {
            let m = Multidegree::new(degrees.clone()).map_err(Failure::usage)?;
            let basis = src.u_inv_basis(&m, *weight).map_err(Failure::usage)?;
            debug_assert_eq!(basis, u_inv_basis(&m, *weight));
            Ok(Success::ok(&UinvOut {
                m: degrees.clone(),
                weight: *weight,
                dim: basis.len(),
                multiplicity: multiplicity(&m, *weight),
                basis,
            }))
        }
        Command::Sstest {
            mode,
            degrees,
            point,
            dbound,
            chi,
            n,
        } => {
            let verdict = match mode {
                Mode::U => u_semistable(src, point, degrees, *dbound),
                Mode::B => {
                    let config = Config::new(degrees.clone(), *chi, *n, *dbound).map_err(Failure::usage)?;
                    b_semistable(src, point, &config, *dbound)
                }
            }
            .map_err(Failure::usage)?;
            let code = match (&verdict, cli.strict) {
                (SemistabilityVerdict::NoSectionUpTo { .. }, true) => 1,
                _ => 0,
            };
            Ok(Success::with_code(code, &verdict))
        }
        Command::Phi { degrees, point } => {
            let image = phi(point, degrees).map_err(Failure::usage)?;
            Ok(Success::ok(&PhiOut {
                image: image.pair_strings(),
            }))
        }
        Command::Suite { path } => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            let cases = parse_suite(&text).map_err(Failure::usage)?;
            let results = cases
                .into_iter()
                .map(|c| {
                    let report = verify_correspondence(src, &c.config).map_err(Failure::usage)?;
                    Ok(SuiteCaseOut { name: c.name, report })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let pass = results.iter().all(|r| r.report.pass);
            Ok(Success::with_code(
                if pass { 0 } else { 1 },
                &SuiteOut {
                    pass,
                    cases: results.len(),
                    results,
                },
            ))
        }
    }
}
