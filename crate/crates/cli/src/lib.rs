//! Command-line front end for `heron-curves`.
//!
//! [`run`] parses arguments, dispatches to the library and writes a single
//! JSON document (or CSV table) to `out`. Exit codes: 0 on success, 1 on
//! domain errors or failed verification, 2 on parse errors.

mod commands;
mod output;
mod verify;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use heron_curves::isosceles::Branch;
use heron_curves::Rational;

pub const SCHEMA: &str = "heron-curves/1";

#[derive(Debug, Parser)]
#[command(name = "heron-curves", version, about = "Rational triangles from rational points on curves")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for searches and enumerations.
    #[arg(
        long,
        global = true,
        env = "HERON_CURVES_JOBS",
        default_value_t = 1,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    jobs: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Isosceles triangles over the base O P1.
    Isosceles(IsoscelesArgs),
    /// Heron triangles with apex on y = m x + 1.
    #[command(subcommand)]
    Heron(HeronCommand),
    /// Triangles with apex on the parabola x = y^2.
    #[command(subcommand)]
    Genus3(Genus3Command),
    /// Re-check a JSON report independently.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["t", "enumerate"]))]
struct IsoscelesArgs {
    /// Base endpoint as X,Y.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    p1: (Rational, Rational),
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    t: Option<Rational>,
    /// + or -; both branches when omitted.
    #[arg(long, value_parser = parse_branch, allow_hyphen_values = true, requires = "t")]
    branch: Option<Branch>,
    /// All parameters up to --height.
    #[arg(long, requires = "height")]
    enumerate: bool,
    #[arg(long, requires = "enumerate")]
    height: Option<u64>,
}

#[derive(Debug, Args)]
struct MqArgs {
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    m: Rational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    q: Rational,
}

#[derive(Debug, Subcommand)]
enum HeronCommand {
    /// The Weierstrass curve E_{m,q} and its invariants.
    Curve(MqArgs),
    /// Distinct triangles from the multiples of the first rank witness.
    Gen {
        #[command(flatten)]
        mq: MqArgs,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Rational 2-torsion; with --n, q is chosen to give full 2-torsion.
    #[command(group = clap::ArgGroup::new("which").required(true).args(["q", "n"]))]
    Torsion {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        n: Option<Rational>,
    },
    /// The point of order 4 for parameters (m, t).
    Order4 {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        t: Rational,
    },
    /// Rank witnesses: P at --q, Q from --h, H from --u.
    #[command(group = clap::ArgGroup::new("which").required(true).multiple(true).args(["q", "h", "u"]))]
    Witnesses {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        h: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        u: Option<Rational>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Isosceles,
    Right,
    Both,
}

#[derive(Debug, Subcommand)]
enum Genus3Command {
    /// The explicit points for parameter u.
    Special {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        u: Rational,
        #[arg(long, value_enum, default_value_t = Family::Both)]
        family: Family,
    },
    /// Points with apex (Y^2, Y), height of Y at most --height.
    Search {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Rational,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        height: u64,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Report file; standard input when omitted or "-".
    file: Option<std::path::PathBuf>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_point(s: &str) -> Result<(Rational, Rational), String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected X,Y but got {s:?}"))?;
    Ok((parse_rational(x)?, parse_rational(y)?))
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    match s {
        "+" | "plus" => Ok(Branch::Plus),
        "-" | "minus" => Ok(Branch::Minus),
        _ => Err(format!("branch must be + or -, got {s:?}")),
    }
}

/// Why a command did not produce a report.
#[derive(Debug)]
pub(crate) enum Failure {
    Parse(String),
    Domain(String),
}

impl From<heron_curves::Error> for Failure {
    fn from(e: heron_curves::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let jobs = usize::try_from(cli.jobs).unwrap_or(usize::MAX);
    let result = match cli.command {
        Command::Isosceles(args) => commands::isosceles(args, jobs).map(|v| (v, true)),
        Command::Heron(cmd) => commands::heron(cmd).map(|v| (v, true)),
        Command::Genus3(cmd) => commands::genus3(cmd, jobs).map(|v| (v, true)),
        Command::Verify(args) => read_input(args.file.as_deref(), stdin).and_then(|s| verify::verify_report(&s)),
    };
    match result {
        Ok((mut report, ok)) => {
            if let Some(obj) = report.as_object_mut() {
                obj.insert("schema".into(), SCHEMA.into());
            }
            if let Err(e) = output::write(&report, cli.format, out) {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return 1;
            }
            if ok {
                0
            } else {
                let _ = writeln!(err, "error: verification failed");
                1
            }
        }
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn read_input(path: Option<&std::path::Path>, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p).map_err(|e| Failure::Parse(format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Parse(format!("standard input: {e}")))?;
        }
    }
    Ok(s)
}
