//! Benchmark sweeps over planted instances, written as CSV rows.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gen::generate;
use crate::engine::{gcd_with_report, GcdConfig};
use crate::error::{Error, Result};
use crate::field::PrimeField;

pub const CSV_HEADER: &str = "suite,n,terms,degree,seed,wall_ms,retries,success";

/// Instances per sweep point.
pub const INSTANCES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Vary the term count at `n = 6`, degree 30.
    Terms,
    /// Vary `n` at 30 terms, degree 100.
    Vars,
    /// Vary the degree at `n = 6`, 30 terms.
    Degree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Ci,
    Desk,
    Full,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Terms => "terms",
            Suite::Vars => "vars",
            Suite::Degree => "degree",
        }
    }

    pub fn points(self, preset: Preset) -> Vec<u32> {
        match (self, preset) {
            (Suite::Terms, Preset::Ci) => vec![2, 10, 20],
            (Suite::Terms, Preset::Desk) => vec![2, 10, 20, 40, 80, 152],
            (Suite::Terms, Preset::Full) => (2..=152).step_by(10).collect(),
            (Suite::Vars, Preset::Ci) => vec![1, 2, 3],
            (Suite::Vars, Preset::Desk) => vec![1, 2, 4, 8, 16, 32],
            (Suite::Vars, Preset::Full) => {
                std::iter::once(1).chain((10..=200).step_by(10)).collect()
            }
            (Suite::Degree, Preset::Ci) => vec![5, 10],
            (Suite::Degree, Preset::Desk) => vec![5, 100, 400, 1600, 6400],
            (Suite::Degree, Preset::Full) => (5..=29525).step_by(500).collect(),
        }
    }

    /// `(n, terms, degree)` at a sweep point.
    pub fn shape(self, point: u32) -> (usize, usize, u32) {
        match self {
            Suite::Terms => (6, point as usize, 30),
            Suite::Vars => (point as usize, 30, 100),
            Suite::Degree => (6, 30, point),
        }
    }

    /// Per-instance wall-time limit used when none is given.
    pub fn default_time_limit(self) -> Duration {
        match self {
            Suite::Degree => Duration::from_secs(100),
            _ => Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub suite: &'static str,
    pub n: usize,
    pub terms: usize,
    pub degree: u32,
    pub seed: u64,
    pub wall_ms: u128,
    pub retries: u32,
    pub success: bool,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.suite,
            self.n,
            self.terms,
            self.degree,
            self.seed,
            self.wall_ms,
            self.retries,
            self.success
        )
    }
}

/// Seed of instance `i` at a sweep point.
pub fn instance_seed(base: u64, point: u32, i: usize) -> u64 {
    base.wrapping_mul(1_000_003)
        .wrapping_add((point as u64) << 8)
        .wrapping_add(i as u64)
}

/// Generates and solves one instance. A row is produced for every outcome
/// except invalid generator parameters.
pub fn run_instance(
    field: &PrimeField,
    suite: Suite,
    point: u32,
    seed: u64,
    base_cfg: &GcdConfig,
    limit: Duration,
) -> Result<BenchRow> {
    let (n, terms, degree) = suite.shape(point);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inst = generate(field, n, terms, degree, &mut rng)?;
    let start = Instant::now();
    let cfg = GcdConfig {
        seed,
        deadline: Some(start + limit),
        ..base_cfg.clone()
    };
    let outcome = gcd_with_report(field, &inst.a, &inst.b, &cfg);
    let wall_ms = start.elapsed().as_millis();
    let (retries, success) = match outcome {
        Ok((g, report)) => (report.retries, g == inst.g),
        Err(Error::InvalidInput(msg)) => return Err(Error::InvalidInput(msg)),
        Err(_) => (base_cfg.max_retries, false),
    };
    Ok(BenchRow {
        suite: suite.name(),
        n,
        terms,
        degree,
        seed,
        wall_ms,
        retries,
        success,
    })
}

/// Appends rows to a CSV file, writing the header if the file is new or empty.
/// Each row goes out in a single write.
pub struct CsvSink {
    file: std::fs::File,
}

impl CsvSink {
    pub fn open(path: &Path) -> std::io::Result<Self> {
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        if file.metadata()?.len() == 0 {
            file.write_all(format!("{CSV_HEADER}\n").as_bytes())?;
        }
        Ok(CsvSink { file })
    }

    pub fn append(&mut self, row: &BenchRow) -> std::io::Result<()> {
        self.file
            .write_all(format!("{}\n", row.to_csv()).as_bytes())?;
        self.file.flush()
    }
}

/// Runs a sweep, calling `emit` after each instance. The sweep stops after
/// the first point where an instance runs past `limit`; later points would
/// only be slower.
pub fn sweep(
    field: &PrimeField,
    suite: Suite,
    points: &[u32],
    base_seed: u64,
    cfg: &GcdConfig,
    limit: Duration,
    mut emit: impl FnMut(&BenchRow) -> Result<()>,
) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &point in points {
        let mut over = false;
        for i in 0..INSTANCES {
            let row = run_instance(
                field,
                suite,
                point,
                instance_seed(base_seed, point, i),
                cfg,
                limit,
            )?;
            over |= row.wall_ms >= limit.as_millis();
            emit(&row)?;
            rows.push(row);
        }
        if over {
            break;
        }
    }
    Ok(rows)
}
