//! The `spgcd` command line: `gcd`, `gen`, `bench` and `verify`.
//!
//! Exit codes: 0 success, 1 usage, parse or I/O error, 2 the GCD failed
//! after all retries, 3 verification failed.

pub mod bench;
pub mod format;
pub mod gen;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engine::{gcd, ExtensionPolicy, GcdConfig, TermStrategy};
use crate::error::Error;
use crate::field::PrimeField;
use crate::oracle::{dense_gcd, divides_exactly, DensePoly};
use bench::{CsvSink, Preset, Suite};
use format::PolyFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

pub const DEFAULT_PRIME: u64 = 10_000_019;

#[derive(Debug, Parser)]
#[command(
    name = "spgcd",
    version,
    about = "Sparse multivariate GCD over prime fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TermStrategyArg {
    Doubling,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtensionArg {
    /// Extension degrees from the failure tolerance.
    Formula,
    /// Stay in the smallest field that holds the exponents.
    BaseField,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Terms,
    Vars,
    Degree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    Ci,
    Desk,
    Full,
}

#[derive(Debug, Clone, clap::Args)]
pub struct EngineArgs {
    /// Target failure probability.
    #[arg(long, default_value_t = 1e-3)]
    pub epsilon: f64,
    #[arg(long, env = "SPGCD_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Primitive element of F_p (6 for p = 10000019, otherwise searched).
    #[arg(long)]
    pub omega: Option<u64>,
    #[arg(long, default_value_t = 3)]
    pub retries: u32,
    #[arg(long, value_enum, default_value_t = TermStrategyArg::Linear)]
    pub term_strategy: TermStrategyArg,
    #[arg(long, value_enum, default_value_t = ExtensionArg::BaseField)]
    pub extension: ExtensionArg,
}

impl EngineArgs {
    pub fn config(&self) -> GcdConfig {
        GcdConfig {
            epsilon: self.epsilon,
            seed: self.seed,
            max_retries: self.retries,
            term_strategy: match self.term_strategy {
                TermStrategyArg::Doubling => TermStrategy::Doubling,
                TermStrategyArg::Linear => TermStrategy::Linear,
            },
            omega: self.omega,
            extension: match self.extension {
                ExtensionArg::Formula => ExtensionPolicy::Formula,
                ExtensionArg::BaseField => ExtensionPolicy::BaseFieldOnly,
            },
            ..GcdConfig::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute gcd(A, B).
    Gcd {
        a: PathBuf,
        b: PathBuf,
        /// Output file (standard output when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Write a planted instance to <PREFIX>_a.poly, <PREFIX>_b.poly and <PREFIX>_g.poly.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        terms: usize,
        /// Total degree bound of G and both cofactors.
        #[arg(long)]
        deg: u32,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        p: u64,
        #[arg(long, env = "SPGCD_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out_prefix: PathBuf,
    },
    /// Run a benchmark sweep and append CSV rows.
    Bench {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, value_enum, default_value_t = PresetArg::Desk)]
        preset: PresetArg,
        /// Comma-separated sweep values, overriding the preset. Empty for no points.
        #[arg(long, num_args = 0..=1, default_missing_value = "")]
        points: Option<String>,
        /// Per-instance limit in seconds (60, or 100 for the degree suite).
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        p: u64,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Check that G divides A and B, and compare with the dense GCD when small.
    Verify { g: PathBuf, a: PathBuf, b: PathBuf },
}

/// Parses `args` (including the program name) and runs the command,
/// writing human-readable output to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
            } else {
                let _ = write!(out, "{}", e.render());
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Gcd {
            a,
            b,
            output,
            engine,
        } => cmd_gcd(&a, &b, output.as_deref(), &engine, out),
        Command::Gen {
            n,
            terms,
            deg,
            p,
            seed,
            out_prefix,
        } => cmd_gen(n, terms, deg, p, seed, &out_prefix, out),
        Command::Bench {
            suite,
            csv,
            preset,
            points,
            time_limit,
            p,
            engine,
        } => cmd_bench(suite, &csv, preset, points, time_limit, p, &engine, out),
        Command::Verify { g, a, b } => cmd_verify(&g, &a, &b, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "spgcd: {e}");
            match e {
                Error::Failure { .. } | Error::DeadlineExceeded => EXIT_FAILURE,
                e if e.is_retryable() => EXIT_FAILURE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::InvalidInput(format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> crate::Result<()> {
    std::fs::write(path, text).map_err(|e| io_err(path, e))
}

fn read_pair(a: &Path, b: &Path) -> crate::Result<(PolyFile, PolyFile)> {
    let (fa, fb) = (PolyFile::read(a)?, PolyFile::read(b)?);
    if fa.field != fb.field {
        return Err(Error::InvalidInput(format!(
            "{} is over F_{} but {} is over F_{}",
            a.display(),
            fa.field.modulus(),
            b.display(),
            fb.field.modulus()
        )));
    }
    if fa.poly.nvars() != fb.poly.nvars() {
        return Err(Error::InvalidInput(format!(
            "{} has {} variables but {} has {}",
            a.display(),
            fa.poly.nvars(),
            b.display(),
            fb.poly.nvars()
        )));
    }
    Ok((fa, fb))
}

fn cmd_gcd(
    a: &Path,
    b: &Path,
    output: Option<&Path>,
    engine: &EngineArgs,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    let (fa, fb) = read_pair(a, b)?;
    let g = gcd(&fa.field, &fa.poly, &fb.poly, &engine.config())?;
    let text = PolyFile::new(fa.field, g).render();
    match output {
        Some(path) => write_file(path, &text)?,
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| io_err(Path::new("<stdout>"), e))?,
    }
    Ok(EXIT_OK)
}

fn cmd_gen(
    n: usize,
    terms: usize,
    deg: u32,
    p: u64,
    seed: u64,
    prefix: &Path,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    let field = PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inst = gen::generate(&field, n, terms, deg, &mut rng)?;
    for (suffix, poly) in [("a", inst.a), ("b", inst.b), ("g", inst.g)] {
        let mut name = prefix.as_os_str().to_owned();
        name.push(format!("_{suffix}.poly"));
        let path = PathBuf::from(name);
        write_file(&path, &PolyFile::new(field, poly).render())?;
        let _ = writeln!(out, "wrote {}", path.display());
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    suite: SuiteArg,
    csv: &Path,
    preset: PresetArg,
    points: Option<String>,
    time_limit: Option<f64>,
    p: u64,
    engine: &EngineArgs,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    let suite = match suite {
        SuiteArg::Terms => Suite::Terms,
        SuiteArg::Vars => Suite::Vars,
        SuiteArg::Degree => Suite::Degree,
    };
    let preset = match preset {
        PresetArg::Ci => Preset::Ci,
        PresetArg::Desk => Preset::Desk,
        PresetArg::Full => Preset::Full,
    };
    let points = match points {
        Some(list) => parse_points(&list)?,
        None => suite.points(preset),
    };
    let limit = match time_limit {
        Some(s) if s.is_finite() && s > 0.0 => Duration::from_secs_f64(s),
        Some(s) => {
            return Err(Error::InvalidInput(format!(
                "time limit {s} must be positive"
            )))
        }
        None => suite.default_time_limit(),
    };
    let field = PrimeField::new(p)?;
    let mut sink = CsvSink::open(csv).map_err(|e| io_err(csv, e))?;
    let rows = bench::sweep(
        &field,
        suite,
        &points,
        engine.seed,
        &engine.config(),
        limit,
        |row| sink.append(row).map_err(|e| io_err(csv, e)),
    )?;
    let ok = rows.iter().filter(|r| r.success).count();
    let _ = writeln!(
        out,
        "{} rows, {ok} successful, appended to {}",
        rows.len(),
        csv.display()
    );
    Ok(EXIT_OK)
}

fn parse_points(list: &str) -> crate::Result<Vec<u32>> {
    list.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| {
            w.parse()
                .map_err(|_| Error::InvalidInput(format!("bad sweep point `{w}`")))
        })
        .collect()
}

fn cmd_verify(g: &Path, a: &Path, b: &Path, out: &mut dyn Write) -> crate::Result<i32> {
    let (fa, fb) = read_pair(a, b)?;
    let (_, fg) = read_pair(a, g)?;
    let field = fa.field;
    if fg.poly.is_zero() {
        let _ = writeln!(out, "divisibility: G is zero");
        return Ok(EXIT_VERIFY);
    }
    let divides = [&fa, &fb]
        .iter()
        .all(|f| divides_exactly(&field, &fg.poly, &f.poly).is_some());
    let _ = writeln!(
        out,
        "divisibility: {}",
        if divides { "ok" } else { "FAILED" }
    );
    if !divides {
        return Ok(EXIT_VERIFY);
    }
    match dense_gcd(
        &field,
        &DensePoly::from_sparse(&field, &fa.poly),
        &DensePoly::from_sparse(&field, &fb.poly),
    ) {
        Ok(d) => {
            let agrees = d.to_sparse(&field) == fg.poly.lex_monic(&field);
            let _ = writeln!(
                out,
                "dense gcd: {}",
                if agrees { "agrees" } else { "DISAGREES" }
            );
            Ok(if agrees { EXIT_OK } else { EXIT_VERIFY })
        }
        Err(Error::BudgetExceeded(why)) => {
            let _ = writeln!(
                out,
                "dense gcd: skipped, oracle budget exceeded ({why}); divisibility only"
            );
            Ok(EXIT_OK)
        }
        Err(e) => Err(e),
    }
}
