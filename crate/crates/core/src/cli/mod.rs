//! Library side of the `hexvalid` tool: batch checking, baseline comparison
//! and throughput benchmarking. The binary only parses arguments.

pub mod hexlist;
pub mod report;

use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::baselines::{corner_scaled_jacobian_min, corner_tet_test};
use crate::checker::{check_hex, CheckConfig, Status, ValidityVerdict};
use crate::dataset::{synthetic, Mix};
use crate::geometry::HexNodes;

pub use hexlist::{parse_hexlist, parse_hexlist_str, write_hexlist, Element, ParseError};
pub use report::{Format, Record, Summary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_ALL_VALID: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Config(#[from] crate::error::Error),
    #[error("failed to start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_ERROR
    }
}

/// Logical core count, the default worker count.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `f` over `items` on `jobs` workers. Output order matches input order.
pub fn par_map<T: Sync, R: Send>(
    items: &[T],
    jobs: usize,
    f: impl Fn(&T) -> R + Sync + Send,
) -> Result<Vec<R>, CliError> {
    if jobs <= 1 {
        return Ok(items.iter().map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(|| items.par_iter().map(f).collect()))
}

/// Checks every element; verdicts are in element order for any `jobs`.
pub fn check_batch(elements: &[HexNodes], cfg: &CheckConfig, jobs: usize) -> Result<Vec<ValidityVerdict>, CliError> {
    par_map(elements, jobs, |h| check_hex(h, cfg))
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub config: CheckConfig,
    pub jobs: usize,
    pub format: Format,
    pub quiet: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            config: CheckConfig::default(),
            jobs: 1,
            format: Format::Table,
            quiet: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckRun {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl CheckRun {
    pub fn exit_code(&self) -> i32 {
        if self.summary.valid == self.summary.elements {
            EXIT_OK
        } else {
            EXIT_NOT_ALL_VALID
        }
    }
}

/// `hexvalid check <file>`.
pub fn cmd_check<W: Write>(input: &Path, opts: &CheckOptions, out: &mut W) -> Result<CheckRun, CliError> {
    opts.config.validate()?;
    let elements = parse_hexlist(input)?;
    let nodes: Vec<HexNodes> = elements.iter().map(|e| e.nodes).collect();

    let start = Instant::now();
    let verdicts = check_batch(&nodes, &opts.config, opts.jobs)?;
    let secs = start.elapsed().as_secs_f64();

    let records: Vec<Record> = elements
        .iter()
        .zip(&verdicts)
        .map(|(e, v)| Record::new(&e.id, v))
        .collect();
    let summary = Summary::tally(&records, secs);
    if !opts.quiet {
        report::write_check_report(out, opts.format, &records, &summary)?;
    }
    Ok(CheckRun { records, summary })
}

#[derive(Debug, Clone)]
pub struct CompareOptions {
    pub config: CheckConfig,
    /// Threshold of the corner scaled-Jacobian screen.
    pub quality_min: f64,
    pub jobs: usize,
    pub format: Format,
}

impl Default for CompareOptions {
    fn default() -> Self {
        Self {
            config: CheckConfig::default(),
            quality_min: 0.0,
            jobs: 1,
            format: Format::Table,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodStats {
    pub method: String,
    /// Elements the method accepts although the robust check rejects them.
    pub false_valid: usize,
    /// Elements the method rejects although the robust check accepts them.
    pub false_invalid: usize,
    pub accepted: usize,
    pub time_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub elements: usize,
    pub invalid: usize,
    /// Elements left undetermined by the robust check; excluded from the
    /// false-valid and false-invalid counts.
    pub undetermined: usize,
    pub methods: Vec<MethodStats>,
}

impl CompareReport {
    pub fn method(&self, name: &str) -> Option<&MethodStats> {
        self.methods.iter().find(|m| m.method == name)
    }
}

pub const METHOD_ROBUST: &str = "robust";
pub const METHOD_CORNER_TETS: &str = "corner_tets";
pub const METHOD_SCALED_JACOBIAN: &str = "scaled_jacobian";

fn timed<R>(f: impl FnOnce() -> R) -> (R, f64) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed().as_secs_f64())
}

/// Compares the cheap screens against the robust verdict on a set of
/// elements.
pub fn compare_elements(elements: &[HexNodes], opts: &CompareOptions) -> Result<CompareReport, CliError> {
    opts.config.validate()?;
    let (robust, t_robust) = timed(|| check_batch(elements, &opts.config, opts.jobs));
    let robust = robust?;
    let (tets, t_tets) = timed(|| par_map(elements, opts.jobs, corner_tet_test));
    let tets = tets?;
    let q = opts.quality_min;
    let (quality, t_quality) = timed(|| {
        par_map(elements, opts.jobs, |h| {
            corner_scaled_jacobian_min(h).is_ok_and(|v| v >= q)
        })
    });
    let quality = quality?;

    let stats = |method: &str, accepted: &[bool], time_s: f64| {
        let mut s = MethodStats {
            method: method.to_string(),
            false_valid: 0,
            false_invalid: 0,
            accepted: accepted.iter().filter(|&&a| a).count(),
            time_s,
        };
        for (v, &a) in robust.iter().zip(accepted) {
            match (v.status, a) {
                (Status::Invalid, true) => s.false_valid += 1,
                (Status::Valid, false) => s.false_invalid += 1,
                _ => {}
            }
        }
        s
    };
    let robust_accepts: Vec<bool> = robust.iter().map(|v| v.status == Status::Valid).collect();
    Ok(CompareReport {
        elements: elements.len(),
        invalid: robust.iter().filter(|v| v.status == Status::Invalid).count(),
        undetermined: robust.iter().filter(|v| v.status == Status::Undetermined).count(),
        methods: vec![
            stats(METHOD_ROBUST, &robust_accepts, t_robust),
            stats(METHOD_CORNER_TETS, &tets, t_tets),
            stats(METHOD_SCALED_JACOBIAN, &quality, t_quality),
        ],
    })
}

/// `hexvalid compare <file>`.
pub fn cmd_compare<W: Write>(input: &Path, opts: &CompareOptions, out: &mut W) -> Result<CompareReport, CliError> {
    let elements = parse_hexlist(input)?;
    let nodes: Vec<HexNodes> = elements.iter().map(|e| e.nodes).collect();
    let report = compare_elements(&nodes, opts)?;
    match opts.format {
        Format::Jsonl => {
            for m in &report.methods {
                serde_json::to_writer(&mut *out, m).map_err(io::Error::from)?;
                writeln!(out)?;
            }
            #[derive(Serialize)]
            struct Line<'a> {
                summary: Totals<'a>,
            }
            #[derive(Serialize)]
            struct Totals<'a> {
                elements: &'a usize,
                invalid: &'a usize,
                undetermined: &'a usize,
                quality_min: f64,
            }
            let line = Line {
                summary: Totals {
                    elements: &report.elements,
                    invalid: &report.invalid,
                    undetermined: &report.undetermined,
                    quality_min: opts.quality_min,
                },
            };
            serde_json::to_writer(&mut *out, &line).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Table => {
            writeln!(
                out,
                "{} elements, {} invalid, {} undetermined (scaled-Jacobian threshold {})",
                report.elements, report.invalid, report.undetermined, opts.quality_min
            )?;
            writeln!(
                out,
                "{:<16}  {:>12}  {:>14}  {:>10}",
                "method", "false valid", "false invalid", "time [s]"
            )?;
            for m in &report.methods {
                writeln!(
                    out,
                    "{:<16}  {:>12}  {:>14}  {:>10.6}",
                    m.method, m.false_valid, m.false_invalid, m.time_s
                )?;
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub count: usize,
    pub mix: Mix,
    pub seed: u64,
    pub jobs: usize,
    pub config: CheckConfig,
    pub format: Format,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            count: 1_000_000,
            mix: Mix::Valid,
            seed: 42,
            jobs: 1,
            config: CheckConfig::default(),
            format: Format::Table,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub count: usize,
    pub mix: String,
    pub seed: u64,
    /// FNV-1a digest of the coordinate bits of the generated dataset.
    pub dataset_digest: String,
    pub valid: usize,
    pub invalid: usize,
    pub undetermined: usize,
    pub single_thread_time_s: f64,
    pub single_thread_rate: f64,
    pub jobs: usize,
    pub parallel_time_s: Option<f64>,
    pub parallel_rate: Option<f64>,
}

pub fn dataset_digest(hexes: &[HexNodes]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut hash = OFFSET;
    for h in hexes {
        for p in h.nodes() {
            for c in p.to_array() {
                for byte in c.to_bits().to_le_bytes() {
                    hash ^= byte as u64;
                    hash = hash.wrapping_mul(PRIME);
                }
            }
        }
    }
    hash
}

/// Times `check_hex` over `hexes` on the calling thread.
pub fn time_single_thread(hexes: &[HexNodes], cfg: &CheckConfig) -> ([usize; 3], f64) {
    let start = Instant::now();
    let mut counts = [0usize; 3];
    for h in hexes {
        let v = check_hex(std::hint::black_box(h), cfg);
        counts[v.status as usize] += 1;
    }
    (counts, start.elapsed().as_secs_f64())
}

/// `hexvalid bench`.
pub fn cmd_bench<W: Write>(opts: &BenchOptions, out: &mut W) -> Result<BenchReport, CliError> {
    opts.config.validate()?;
    let hexes = synthetic(opts.count, opts.mix, opts.seed);
    let (counts, single) = time_single_thread(&hexes, &opts.config);

    let (parallel_time_s, parallel_rate) = if opts.jobs > 1 {
        let (r, secs) = timed(|| check_batch(&hexes, &opts.config, opts.jobs));
        r?;
        (Some(secs), Some(report::rate(hexes.len(), secs)))
    } else {
        (None, None)
    };

    let report = BenchReport {
        count: hexes.len(),
        mix: format!("{:?}", opts.mix).to_lowercase(),
        seed: opts.seed,
        dataset_digest: format!("{:016x}", dataset_digest(&hexes)),
        valid: counts[Status::Valid as usize],
        invalid: counts[Status::Invalid as usize],
        undetermined: counts[Status::Undetermined as usize],
        single_thread_time_s: single,
        single_thread_rate: report::rate(hexes.len(), single),
        jobs: opts.jobs,
        parallel_time_s,
        parallel_rate,
    };
    match opts.format {
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, &report).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Table => {
            writeln!(
                out,
                "dataset: {} hexahedra, mix {}, seed {}, digest {}",
                report.count, report.mix, report.seed, report.dataset_digest
            )?;
            writeln!(
                out,
                "verdicts: {} valid, {} invalid, {} undetermined",
                report.valid, report.invalid, report.undetermined
            )?;
            writeln!(
                out,
                "1 thread: {:.6} s, {:.0} hexahedra/s",
                report.single_thread_time_s, report.single_thread_rate
            )?;
            if let (Some(t), Some(r)) = (report.parallel_time_s, report.parallel_rate) {
                writeln!(out, "{} threads: {:.6} s, {:.0} hexahedra/s", report.jobs, t, r)?;
            }
        }
    }
    Ok(report)
}
