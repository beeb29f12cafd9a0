//! The `realize` command line. Exit status: 0 success, 1 a verification
//! clause failed, 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::automorphisms::{core, enumerate_automorphisms};
use crate::group::{
    make_group, GeneratorSpec, GeneratorStrategy, GroupError, GroupSpec, Retraction, RetractionSpec, DEFAULT_ISO_BOUND,
};
use crate::oracle::run_oracle_suite;
use crate::poset::{Poset, PosetError};
use crate::realization::{component_poset, RealizationError, RealizationSpace};
use crate::verification::{
    verify_corollary, verify_height0, verify_theorem, VerificationReport, VerifyError, VerifyOptions, DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(
    name = "realize",
    version,
    about = "Build and verify height-1 finite spaces realizing group retractions"
)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build X_r and write the poset JSON plus a manifest.
    Build(BuildArgs),
    /// Run the verification pipeline and report each clause.
    Verify(VerifyArgs),
    /// Enumerate the automorphism group of a poset file.
    Aut { path: PathBuf },
    /// Reduce a poset file to its core by removing beat points.
    Core { path: PathBuf },
    /// Render a poset file as Graphviz DOT.
    Dot { path: PathBuf },
    /// Compare the automorphism search with brute force on random posets.
    OracleAut {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
    },
}

#[derive(Args, Debug)]
struct SpaceArgs {
    /// cyclic:N, dihedral:N, symmetric:K, product:A,B or table:PATH
    #[arg(long)]
    group: Option<String>,
    /// identity, trivial, or file:PATH with {"endo": [...]}
    #[arg(long, default_value = "identity")]
    retraction: String,
    /// greedy (alias auto) or all; ignored when --s1/--s2 are given
    #[arg(long, default_value = "greedy")]
    gens: String,
    /// Explicit kernel generators, comma separated.
    #[arg(long, value_delimiter = ',')]
    s1: Option<Vec<usize>>,
    /// Explicit image generators, comma separated.
    #[arg(long, value_delimiter = ',')]
    s2: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Write the single gadget C_e with this many arms instead of X_r.
    #[arg(long, conflicts_with = "group")]
    component: Option<usize>,
    #[arg(long, default_value = "space.json")]
    out: PathBuf,
    /// Defaults to the output path with a `.manifest.json` extension.
    #[arg(long)]
    manifest: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Verify the discrete space on N points instead.
    #[arg(long, conflicts_with = "group")]
    height0: Option<usize>,
    /// Also write the report as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ISO_BOUND)]
    iso_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorChoice {
    Strategy(GeneratorStrategy),
    Explicit { s1: Vec<usize>, s2: Vec<usize> },
}

/// Parsed inputs for building or verifying one space.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: GroupSpec,
    pub retraction: RetractionSpec,
    pub gens: GeneratorChoice,
    pub seed: u64,
    pub iso_bound: usize,
}

impl RunConfig {
    fn from_args(args: &SpaceArgs, seed: u64, iso_bound: usize) -> Result<Self, CliError> {
        let group = args
            .group
            .as_deref()
            .ok_or_else(|| CliError::Usage("--group is required".into()))?
            .parse()?;
        let retraction = args.retraction.parse()?;
        let gens = match (&args.s1, &args.s2) {
            (None, None) => GeneratorChoice::Strategy(match args.gens.as_str() {
                "greedy" | "auto" => GeneratorStrategy::Greedy,
                "all" => GeneratorStrategy::All,
                other => return Err(CliError::Usage(format!("unknown generator strategy {other:?}"))),
            }),
            (s1, s2) => GeneratorChoice::Explicit {
                s1: s1.clone().unwrap_or_default(),
                s2: s2.clone().unwrap_or_default(),
            },
        };
        Ok(Self {
            group,
            retraction,
            gens,
            seed,
            iso_bound,
        })
    }

    pub fn resolve(&self) -> Result<(Retraction, GeneratorSpec), CliError> {
        let group = make_group(&self.group)?;
        let retraction = self.retraction.build(group)?;
        let gens = match &self.gens {
            GeneratorChoice::Strategy(s) => GeneratorSpec::default_for(&retraction, *s),
            GeneratorChoice::Explicit { s1, s2 } => GeneratorSpec::new(&retraction, s1.clone(), s2.clone())?,
        };
        Ok((retraction, gens))
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_BAD_INPUT
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn read_poset(path: &Path) -> Result<Poset, CliError> {
    Ok(Poset::from_json(&read(path)?)?)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Build(args) => build(&args, cli.seed, out),
        Command::Verify(args) => verify(&args, cli.seed, out, err),
        Command::Aut { path } => {
            let aut = enumerate_automorphisms(&read_poset(&path)?);
            let _ = writeln!(out, "{}", aut.to_json());
            Ok(EXIT_OK)
        }
        Command::Core { path } => {
            let (core, trace) = core(&read_poset(&path)?);
            let body = serde_json::json!({
                "core": serde_json::from_str::<serde_json::Value>(&core.to_json()).expect("poset JSON parses"),
                "trace": trace,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("core serializes"));
            Ok(EXIT_OK)
        }
        Command::Dot { path } => {
            let _ = write!(out, "{}", read_poset(&path)?.to_dot());
            Ok(EXIT_OK)
        }
        Command::OracleAut { count, max_points } => {
            let report = run_oracle_suite(cli.seed, count, max_points);
            let _ = writeln!(
                out,
                "oracle-aut: {} posets (seed {}), {} mismatches",
                report.cases.len(),
                report.seed,
                report.mismatches
            );
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn build(args: &BuildArgs, seed: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    let manifest_path = args
        .manifest
        .clone()
        .unwrap_or_else(|| args.out.with_extension("manifest.json"));
    let poset = if let Some(m) = args.component {
        component_poset(0, m)?
    } else {
        let config = RunConfig::from_args(&args.space, seed, DEFAULT_ISO_BOUND)?;
        let (retraction, gens) = config.resolve()?;
        let space = RealizationSpace::build(retraction, gens)?;
        let manifest = serde_json::to_string_pretty(&space.manifest()).expect("manifest serializes");
        write_file(&manifest_path, &manifest)?;
        let _ = writeln!(out, "m {}", space.m());
        let _ = writeln!(out, "S1 {:?}  S2 {:?}", space.gens().s1(), space.gens().s2());
        space.poset().clone()
    };
    write_file(&args.out, &poset.to_json())?;
    let _ = writeln!(out, "points {}", poset.len());
    let _ = writeln!(out, "height {}", poset.height());
    let _ = writeln!(out, "connected {}", poset.is_connected().unwrap_or(false));
    let _ = writeln!(out, "wrote {}", args.out.display());
    Ok(EXIT_OK)
}

fn verify(args: &VerifyArgs, seed: u64, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let options = VerifyOptions {
        iso_bound: args.iso_bound,
        seed,
        ..VerifyOptions::default()
    };
    let report: VerificationReport = if let Some(n) = args.height0 {
        verify_height0(n, &options)?
    } else {
        let config = RunConfig::from_args(&args.space, seed, args.iso_bound)?;
        let (retraction, gens) = config.resolve()?;
        match (&config.retraction, &config.gens) {
            (RetractionSpec::Identity, GeneratorChoice::Strategy(s)) => {
                verify_corollary(retraction.group(), *s, &options)
            }
            _ => verify_theorem(&retraction, &gens, &options),
        }
    };
    let _ = write!(out, "{}", report.to_text());
    let _ = writeln!(err, "elapsed {:.3}s", report.elapsed.as_secs_f64());
    if let Some(path) = &args.report {
        write_file(path, &report.to_json())?;
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILED })
}
