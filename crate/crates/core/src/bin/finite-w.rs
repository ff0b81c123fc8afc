use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use finite_w::uea::Uea;
use finite_w::verify::{self, GensReport, VerificationReport, VerifyOptions};
use finite_w::lax::ExtractOptions;
use finite_w::{Error, Half, Kind, Partition, Pyramid, Realization};

#[derive(Parser)]
#[command(name = "finite-w", version, about = "Generators of finite W-algebras of classical type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the pyramid of a partition
    Pyramid {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[command(flatten)]
        out: Output,
    },
    /// Extract generator records with membership and symbol checks
    Gens {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        knobs: Knobs,
        #[command(flatten)]
        out: Output,
    },
    /// Run a verification suite, or one check on one realization
    Verify {
        #[arg(long, conflicts_with = "check")]
        suite: Option<String>,
        /// membership, gr, generation, zy, skv1, help, identities, zeta-brackets or all
        #[arg(long, requires_all = ["kind", "partition"])]
        check: Option<String>,
        #[arg(long, value_parser = parse_kind)]
        kind: Option<Kind>,
        #[arg(long, value_parser = parse_partition)]
        partition: Option<Partition>,
        #[command(flatten)]
        knobs: Knobs,
        #[command(flatten)]
        out: Output,
    },
    /// Check the operator identities on one realization
    Identities {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        knobs: Knobs,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long, value_parser = parse_kind)]
    kind: Kind,
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
}

#[derive(Args)]
struct Knobs {
    /// Largest order p, e.g. 3 or 5/2 [default: λ_1]
    #[arg(long, value_parser = parse_half)]
    p_max: Option<Half>,
    /// Truncation floor in doubled exponents [default: -2(λ_1+1) for gens, -10 otherwise]
    #[arg(long, allow_hyphen_values = true)]
    floor: Option<i32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Output {
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    Kind::parse(s).ok_or_else(|| format!("unknown kind {s:?} (expected gl, so or sp)"))
}

fn parse_half(s: &str) -> Result<Half, String> {
    Half::parse(s).ok_or_else(|| format!("{s:?} is not a multiple of 1/2"))
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidPartition(_)
            | Error::Inadmissible { .. }
            | Error::UnknownSuite(_)
            | Error::NotApplicable(_)
            | Error::OddGrading(_)
            | Error::NotHighestWeight(_) => Failure::Usage(e.to_string()),
            e => Failure::Verification(e.to_string()),
        }
    }
}

fn uea(kind: Kind, partition: Partition) -> Result<Uea, Error> {
    Ok(Uea::new(Realization::new(partition, kind)?))
}

fn options(k: &Knobs, identities_floor: bool) -> VerifyOptions {
    let mut o = VerifyOptions { extract: ExtractOptions { p_max: k.p_max, floor: k.floor }, ..Default::default() };
    if let Some(f) = k.floor.filter(|_| identities_floor) {
        o.floor = f;
    }
    o
}

fn emit(out: &Output, text: String, json: String) -> Result<(), Failure> {
    let body = match out.format {
        Format::Text => text,
        Format::Json => json + "\n",
    };
    match &out.out {
        Some(p) => fs::write(p, body).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn report(out: &Output, rep: &VerificationReport) -> Result<(), Failure> {
    emit(out, rep.to_text(), rep.to_json())?;
    if rep.passed {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} failed", rep.suite)))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Pyramid { partition, out } => {
            let p = Pyramid::new(partition);
            let json = serde_json::to_string_pretty(&p.to_json()).expect("pyramid serializes");
            emit(&out, p.render(), json)
        }
        Command::Gens { target, knobs, out } => {
            let u = uea(target.kind, target.partition)?;
            let g = GensReport::new(&u, &options(&knobs, false))?;
            emit(&out, g.to_text(), g.to_json())?;
            if g.passed() {
                Ok(())
            } else {
                Err(Failure::Verification("a record failed its checks".into()))
            }
        }
        Command::Verify { suite, check, kind, partition, knobs, out } => {
            let opts = options(&knobs, true);
            let rep = match (check, kind, partition) {
                (Some(c), Some(k), Some(p)) => {
                    let u = uea(k, p)?;
                    VerificationReport::new(&c, verify::run_check(&c, &u, &opts)?)
                }
                (None, None, None) => verify::run_suite(suite.as_deref().unwrap_or("standard"), &opts)?,
                _ => return Err(Failure::Usage("--kind and --partition go with --check".into())),
            };
            report(&out, &rep)
        }
        Command::Identities { target, knobs, out } => {
            let u = uea(target.kind, target.partition)?;
            let rep = VerificationReport::new("identities", verify::run_check("identities", &u, &options(&knobs, true))?);
            report(&out, &rep)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
