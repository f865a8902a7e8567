//! Batch verification: enumerate or ingest graphs, run checks in parallel,
//! and report one record per graph in input order.

pub mod checks;
pub mod input;
pub mod report;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{emit_graph6, Graph};

pub use checks::{parse_check_list, Check, Outcome, Subject};
pub use input::{graphs_from_arg, parse_graphs, InputError};
pub use report::{CheckResult, CsvReport, Summary, Tally, VerificationRecord};

/// Largest order the internal enumerator accepts.
pub const MAX_ENUMERATE_N: usize = 7;
/// Largest order a run configuration may name for the enumerator.
pub const MAX_CONFIG_N: usize = 10;
/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "COPWIN_WORKERS";
pub const DEFAULT_K_MAX: usize = 4;
const CHUNK: usize = 1024;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("enumerator supports 1 <= n <= {MAX_ENUMERATE_N}, got {0}; supply larger corpora as graph6")]
    EnumerateRange(usize),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("writing report: {0}")]
    Io(#[from] std::io::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// All connected labeled graphs on `n` vertices, in edge-mask order over the
/// graph6 pair order.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if !(1..=MAX_ENUMERATE_N).contains(&n) {
        return Err(HarnessError::EnumerateRange(n));
    }
    let pairs = n * (n - 1) / 2;
    Ok((0..1u64 << pairs).map(move |m| Graph::from_pair_mask(n, m)).filter(Graph::is_connected))
}

#[derive(Debug, Clone)]
pub enum InputSource {
    /// graph6 lines or one edge list; `-` reads standard input.
    File(PathBuf),
    Enumerate {
        n_min: usize,
        n_max: usize,
    },
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub source: InputSource,
    pub checks: Vec<Check>,
    pub k_max: usize,
    pub workers: usize,
    pub strict: bool,
    /// JSON-lines destination; standard output when `None`.
    pub output: Option<PathBuf>,
    pub csv: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(source: InputSource, checks: Vec<Check>) -> Self {
        RunConfig {
            source,
            checks,
            k_max: DEFAULT_K_MAX,
            workers: default_workers(),
            strict: true,
            output: None,
            csv: None,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.workers == 0 {
            return Err(HarnessError::Config("worker count must be at least 1".into()));
        }
        if self.k_max == 0 {
            return Err(HarnessError::Config("k_max must be at least 1".into()));
        }
        if self.checks.is_empty() {
            return Err(HarnessError::Config("no checks selected".into()));
        }
        if let InputSource::Enumerate { n_min, n_max } = self.source {
            if n_min == 0 || n_min > n_max || n_max > MAX_CONFIG_N {
                return Err(HarnessError::Config(format!("bad n range {n_min}..={n_max}")));
            }
        }
        Ok(())
    }
}

/// Worker count from the environment, else the available parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs every enabled check on one graph.
pub fn verify_graph(graph_id: usize, g: &Graph, checks: &[Check], k_max: usize) -> VerificationRecord {
    let start = Instant::now();
    let mut subject = Subject::new(g, k_max);
    let checks = checks.iter().map(|&c| CheckResult::new(c, subject.run(c))).collect();
    VerificationRecord {
        graph_id,
        graph6: if g.is_empty() { String::new() } else { emit_graph6(g) },
        n: g.n(),
        m: g.edge_count(),
        checks,
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

/// Feeds graphs to `run` in chunks, counting lines skipped in lenient mode.
fn for_each_chunk(
    config: &RunConfig,
    mut run: impl FnMut(Vec<Graph>) -> Result<(), HarnessError>,
) -> Result<usize, HarnessError> {
    let mut chunk = Vec::with_capacity(CHUNK);
    let mut push = |g: Graph, chunk: &mut Vec<Graph>| -> Result<(), HarnessError> {
        chunk.push(g);
        if chunk.len() == CHUNK {
            run(std::mem::replace(chunk, Vec::with_capacity(CHUNK)))?;
        }
        Ok(())
    };
    let mut skipped = 0;
    match &config.source {
        InputSource::Graphs(gs) => {
            for g in gs {
                push(g.clone(), &mut chunk)?;
            }
        }
        InputSource::Enumerate { n_min, n_max } => {
            for n in *n_min..=*n_max {
                for g in enumerate_connected_graphs(n)? {
                    push(g, &mut chunk)?;
                }
            }
        }
        InputSource::File(path) => {
            let text = input::read_source(path)?;
            if input::looks_like_edge_list(&text) {
                push(crate::graph::parse_edge_list(&text).map_err(InputError::from)?, &mut chunk)?;
            } else {
                for line in input::graph6_lines(&text) {
                    match input::parse_line(&line, config.strict) {
                        Ok(g) => push(g, &mut chunk)?,
                        Err(e) if !config.strict => {
                            log::warn!("skipping {e}");
                            skipped += 1;
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            }
        }
    }
    if !chunk.is_empty() {
        run(chunk)?;
    }
    Ok(skipped)
}

/// Runs the configured checks, handing records to `sink` in input order.
pub fn run_verification_with(
    config: &RunConfig,
    mut sink: impl FnMut(&VerificationRecord) -> Result<(), HarnessError>,
) -> Result<Summary, HarnessError> {
    config.validate()?;
    if let InputSource::Enumerate { n_max, .. } = config.source {
        if n_max > MAX_ENUMERATE_N {
            return Err(HarnessError::EnumerateRange(n_max));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.workers).build()?;
    let mut summary = Summary::new(&config.checks);
    let mut next_id = 0;
    let skipped = for_each_chunk(config, |chunk| {
        let base = next_id;
        next_id += chunk.len();
        let records: Vec<VerificationRecord> = pool.install(|| {
            chunk.par_iter().enumerate().map(|(i, g)| verify_graph(base + i, g, &config.checks, config.k_max)).collect()
        });
        for r in &records {
            summary.add(r);
            sink(r)?;
        }
        log::info!("verified {next_id} graphs");
        Ok(())
    })?;
    summary.parse_errors = skipped;
    Ok(summary)
}

/// Runs the configured checks and collects every record.
pub fn run_verification(config: &RunConfig) -> Result<(Vec<VerificationRecord>, Summary), HarnessError> {
    let mut records = Vec::new();
    let summary = run_verification_with(config, |r| {
        records.push(r.clone());
        Ok(())
    })?;
    Ok((records, summary))
}

/// Runs the configured checks and writes the JSON-lines report (and the CSV
/// export when configured).
pub fn write_report(config: &RunConfig) -> Result<Summary, HarnessError> {
    let mut out: Box<dyn Write> = match &config.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    };
    let mut csv = match &config.csv {
        Some(path) => Some(CsvReport::new(BufWriter::new(File::create(path)?))),
        None => None,
    };
    let summary = run_verification_with(config, |r| {
        report::write_json_record(&mut out, r)?;
        if let Some(csv) = csv.as_mut() {
            csv.write(r)?;
        }
        Ok(())
    })?;
    report::write_json_summary(&mut out, &summary)?;
    out.flush()?;
    if let Some(csv) = csv {
        csv.finish()?;
    }
    Ok(summary)
}
