//! The `gtt` command-line front-end.
//!
//! All logic lives here so it can be driven from tests; the binary only
//! forwards `std::env::args_os()` to [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::base::{BaseMatrix, U3Params};
use crate::encode::{compare_transforms, default_restarts, GttChoice, OptimizeOptions};
use crate::error::GttError;
use crate::io::{self, FileError, VectorFormat};
use crate::protocols::{compress_fully_quantum, compress_hybrid, filter_natural};
use crate::signals;
use crate::transform::GttOperator;
use crate::vector::ComplexVector;
use crate::Complex;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_BAD_ARGS: i32 = 2;
pub const EXIT_LENGTH_MISMATCH: i32 = 3;
pub const EXIT_NOT_UNITARY: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "gtt",
    version,
    about = "Generalized tensor transforms: transform, compress, filter, encode, bench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply W^{⊗n} (or its inverse) to a vector.
    Transform(TransformArgs),
    /// Top-k sparse compression, hybrid or simulated fully quantum.
    Compress(CompressArgs),
    /// Natural-order low/high-pass filter with a real qubit rotation.
    Filter(FilterArgs),
    /// Optimize the rotation angle for encoding a sampled function.
    Encode(EncodeArgs),
    /// Count arithmetic work of the fast transform against its bound.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output file; format follows the extension (.json or CSV). Defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Format used when writing to stdout.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct TransformArgs {
    /// Vector file (.csv or .json) or a built-in signal name.
    input: String,
    /// hadamard | dft:<b> | u3:<θ>,<φ>,<λ> | matrix:<file> | <file>
    #[arg(long)]
    base: String,
    /// Number of tensor factors.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    inverse: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Hybrid,
    Quantum,
}

#[derive(Debug, Args)]
struct CompressArgs {
    input: String,
    #[arg(long)]
    base: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Mode::Hybrid)]
    mode: Mode,
    /// JSON report path. Defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FilterArgs {
    input: String,
    /// Rotation angle of u3(θ, 0, π), in radians or as pi, pi/N.
    #[arg(long, allow_hyphen_values = true)]
    theta: String,
    #[arg(long)]
    n: usize,
    /// Spectral indices below this value form the low branch.
    #[arg(long)]
    cutoff: usize,
    /// Prefix for the written files.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct EncodeArgs {
    /// Vector file or built-in signal name (e.g. table2).
    #[arg(long)]
    signal: String,
    #[arg(long)]
    k: usize,
    /// Comma-separated restart angles; defaults to 16 points on [0, π/4] and π/2.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    restarts: Option<Vec<String>>,
    /// Coarse grid resolution over [0, 2π].
    #[arg(long, default_value_t = 256)]
    grid: usize,
    /// Also optimize φ and λ.
    #[arg(long)]
    full_search: bool,
    /// Evaluate this fixed θ instead of optimizing.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["restarts", "full_search"])]
    theta: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated local dimensions.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    bases: Vec<usize>,
    /// Largest transform length benchmarked per base.
    #[arg(long, default_value_t = 1 << 20)]
    max_len: usize,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    /// Include wall-clock times (makes output non-deterministic).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Gtt(#[from] GttError),
    #[error(transparent)]
    File(#[from] FileError),
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let gtt = match self {
            CliError::Usage(_) => return EXIT_BAD_ARGS,
            CliError::CheckFailed(_) => return EXIT_CHECK_FAILED,
            CliError::Gtt(e) | CliError::File(FileError::Gtt(e)) => e,
            CliError::File(_) => return EXIT_BAD_ARGS,
        };
        match gtt {
            GttError::LengthMismatch { .. } => EXIT_LENGTH_MISMATCH,
            GttError::NotUnitary { .. } => EXIT_NOT_UNITARY,
            _ => EXIT_BAD_ARGS,
        }
    }
}

/// Parses arguments and runs a subcommand, printing to the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_ARGS } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Transform(a) => cmd_transform(a, out),
        Command::Compress(a) => cmd_compress(a, out),
        Command::Filter(a) => cmd_filter(a, out),
        Command::Encode(a) => cmd_encode(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Parses radians: a decimal literal or `pi`, `pi/<d>`, optionally negated.
pub fn parse_angle(s: &str) -> Result<f64, CliError> {
    let t = s.trim();
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, t),
    };
    let value = if let Some(rest) = body.strip_prefix("pi") {
        if rest.is_empty() {
            std::f64::consts::PI
        } else if let Some(d) = rest.strip_prefix('/') {
            let d: f64 = d.parse().map_err(|_| CliError::Usage(format!("bad angle {s:?}")))?;
            std::f64::consts::PI / d
        } else {
            return Err(CliError::Usage(format!("bad angle {s:?}")));
        }
    } else {
        body.parse().map_err(|_| CliError::Usage(format!("bad angle {s:?}")))?
    };
    let v = sign * value;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("angle {s:?} is not finite")))
    }
}

/// Parses `hadamard`, `dft:<b>`, `u3:<θ>,<φ>,<λ>`, `matrix:<file>` or a bare matrix file path.
pub fn parse_base(spec: &str) -> Result<BaseMatrix, CliError> {
    if spec == "hadamard" {
        return Ok(BaseMatrix::hadamard());
    }
    if let Some(b) = spec.strip_prefix("dft:") {
        let b: usize = b
            .parse()
            .map_err(|_| CliError::Usage(format!("bad DFT size in {spec:?}")))?;
        return Ok(BaseMatrix::dft(b)?);
    }
    if let Some(angles) = spec.strip_prefix("u3:") {
        let parts: Vec<&str> = angles.split(',').collect();
        let [t, p, l] = parts.as_slice() else {
            return Err(CliError::Usage(format!("u3 needs three angles, got {spec:?}")));
        };
        return Ok(BaseMatrix::u3(U3Params::new(
            parse_angle(t)?,
            parse_angle(p)?,
            parse_angle(l)?,
        ))?);
    }
    let path = spec.strip_prefix("matrix:").unwrap_or(spec);
    if !Path::new(path).is_file() {
        return Err(CliError::Usage(format!("unknown base {spec:?}")));
    }
    Ok(io::read_matrix(Path::new(path))?)
}

/// A file path if one exists, otherwise a built-in signal name.
pub fn resolve_input(input: &str) -> Result<ComplexVector, CliError> {
    let path = Path::new(input);
    if path.is_file() {
        return Ok(io::read_vector(path)?);
    }
    signals::named(input).ok_or_else(|| {
        CliError::Usage(format!(
            "{input:?} is neither a file nor a built-in signal ({})",
            signals::NAMES.join(", ")
        ))
    })
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => io::write_text(p, text)?,
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn operator(base: &str, n: usize) -> Result<GttOperator, CliError> {
    Ok(GttOperator::new(parse_base(base)?, n)?)
}

fn cmd_transform(a: TransformArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let op = operator(&a.base, a.n)?;
    let x = resolve_input(&a.input)?;
    let y = if a.inverse {
        op.apply_inverse(&x)?
    } else {
        op.apply(&x)?
    };
    let format = match (&a.output.out, a.output.format) {
        (Some(p), _) => VectorFormat::from_path(p),
        (None, FormatArg::Csv) => VectorFormat::Csv,
        (None, FormatArg::Json) => VectorFormat::Json,
    };
    emit(out, a.output.out.as_deref(), &io::format_vector(&y, format))
}

#[derive(Serialize)]
struct CompressReport {
    mode: &'static str,
    len: usize,
    k: usize,
    indices: Vec<usize>,
    compressed: Vec<[f64; 2]>,
    fidelity: f64,
    discarded_norm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    success_probability: Option<f64>,
    reconstructed: Vec<[f64; 2]>,
}

fn cmd_compress(a: CompressArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let op = operator(&a.base, a.n)?;
    let state = resolve_input(&a.input)?;
    state.check_len(op.len())?;
    let state = state.normalized()?;
    let hybrid = compress_hybrid(&state, &op, a.k)?;
    let report = match a.mode {
        Mode::Hybrid => CompressReport {
            mode: "hybrid",
            len: op.len(),
            k: a.k,
            indices: hybrid.selection.indices().to_vec(),
            compressed: io::to_pairs(&hybrid.compressed),
            fidelity: hybrid.fidelity,
            discarded_norm: hybrid.discarded_norm,
            success_probability: None,
            reconstructed: io::to_pairs(&hybrid.reconstructed),
        },
        Mode::Quantum => {
            let q = compress_fully_quantum(&state, &op, &hybrid.selection)?;
            CompressReport {
                mode: "quantum",
                len: op.len(),
                k: a.k,
                indices: hybrid.selection.indices().to_vec(),
                compressed: io::to_pairs(&q.transmitted),
                fidelity: crate::protocols::fidelity(&state, &q.reconstructed)?,
                discarded_norm: hybrid.discarded_norm,
                success_probability: Some(q.success_probability),
                reconstructed: io::to_pairs(&q.reconstructed),
            }
        }
    };
    emit(out, a.out.as_deref(), &to_json(&report))
}

/// File names written by `filter` for a given prefix.
pub fn filter_paths(prefix: &Path) -> [PathBuf; 5] {
    let with = |suffix: &str| {
        let mut s = prefix.as_os_str().to_owned();
        s.push(suffix);
        PathBuf::from(s)
    };
    [
        with("_low.csv"),
        with("_high.csv"),
        with("_low_spectrum.csv"),
        with("_high_spectrum.csv"),
        with("_stem.tsv"),
    ]
}

fn cmd_filter(a: FilterArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let theta = parse_angle(&a.theta)?;
    let op = GttOperator::new(BaseMatrix::u3(U3Params::real(theta))?, a.n)?;
    let state = resolve_input(&a.input)?;
    state.check_len(op.len())?;
    let state = state.normalized()?;
    let spectrum = op.apply(&state)?;
    let f = filter_natural(&state, &op, a.cutoff)?;
    let paths = filter_paths(&a.out);
    io::write_text(&paths[0], &io::format_csv(&f.low_branch))?;
    io::write_text(&paths[1], &io::format_csv(&f.high_branch))?;
    io::write_text(&paths[2], &io::format_csv(&f.low_spectrum))?;
    io::write_text(&paths[3], &io::format_csv(&f.high_spectrum))?;
    let mut stem = String::from("index\tinput\tspectrum\tlow\thigh\tlow_spectrum\thigh_spectrum\n");
    for i in 0..op.len() {
        let cols = [
            state[i],
            spectrum[i],
            f.low_branch[i],
            f.high_branch[i],
            f.low_spectrum[i],
            f.high_spectrum[i],
        ];
        stem.push_str(&i.to_string());
        for z in cols {
            stem.push_str(&format!("\t{:?}", z.norm()));
        }
        stem.push('\n');
    }
    io::write_text(&paths[4], &stem)?;
    let listing: String = paths.iter().map(|p| format!("{}\n", p.display())).collect();
    emit(out, None, &listing)
}

fn cmd_encode(a: EncodeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let signal = resolve_input(&a.signal)?.normalized()?;
    let choice = match &a.theta {
        Some(t) => GttChoice::Fixed(U3Params::real(parse_angle(t)?)),
        None => {
            let restarts = match &a.restarts {
                Some(list) => list.iter().map(|s| parse_angle(s)).collect::<Result<Vec<_>, _>>()?,
                None => default_restarts(),
            };
            GttChoice::Optimize(OptimizeOptions {
                restarts,
                grid_points: a.grid,
                full_search: a.full_search,
                ..OptimizeOptions::default()
            })
        }
    };
    let report = compare_transforms(&signal, a.k, &choice)?;
    emit(out, a.out.as_deref(), &to_json(&report))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub b: usize,
    pub n: usize,
    pub len: usize,
    pub mul: u64,
    pub add: u64,
    pub total: u64,
    /// `4·N·b·n`.
    pub bound: u64,
    pub within_bound: bool,
    /// `total / (N·b·n)`.
    pub normalized: f64,
    pub closed_form_total: u64,
    /// `total(n) / total(n−1)`, absent for the first row of a base.
    pub ratio: Option<f64>,
    /// `b·n / (n−1)`.
    pub expected_ratio: Option<f64>,
    pub ratio_within_5pct: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub all_within_bound: bool,
    pub all_ratios_within_5pct: bool,
    pub rows: Vec<BenchRow>,
}

/// Base matrix used for benchmarking dimension `b`.
fn bench_base(b: usize) -> Result<BaseMatrix, GttError> {
    if b == 2 {
        BaseMatrix::u3(U3Params::new(
            std::f64::consts::FRAC_PI_4,
            std::f64::consts::FRAC_PI_3,
            std::f64::consts::FRAC_PI_6,
        ))
    } else {
        BaseMatrix::dft(b)
    }
}

/// Instrumented op counts of the fast transform for every `bⁿ ≤ max_len`.
pub fn bench(bases: &[usize], min_n: usize, max_len: usize, timing: bool) -> Result<BenchReport, GttError> {
    let mut rows = Vec::new();
    for &b in bases {
        let w = bench_base(b)?;
        let mut prev: Option<u64> = None;
        let mut n = min_n.max(1);
        while let Some(len) = b.checked_pow(n as u32).filter(|&l| l <= max_len) {
            let op = GttOperator::new(w.clone(), n)?;
            let x = ComplexVector::new(
                (0..len)
                    .map(|i| {
                        Complex::new(
                            ((i * 7919) % 1009) as f64 / 1009.0,
                            ((i * 104_729) % 997) as f64 / 997.0,
                        )
                    })
                    .collect(),
            )?;
            let start = Instant::now();
            let (_, count) = op.apply_counted(&x)?;
            let elapsed = start.elapsed().as_secs_f64();
            let total = count.total();
            let bound = 4 * (len * b * n) as u64;
            let ratio = prev.map(|p| total as f64 / p as f64);
            let expected_ratio = (n > 1 && prev.is_some()).then(|| (b * n) as f64 / (n - 1) as f64);
            let ratio_within_5pct = ratio.zip(expected_ratio).map(|(r, e)| (r / e - 1.0).abs() <= 0.05);
            rows.push(BenchRow {
                b,
                n,
                len,
                mul: count.mul,
                add: count.add,
                total,
                bound,
                within_bound: total <= bound,
                normalized: total as f64 / (len * b * n) as f64,
                closed_form_total: op.closed_form_count().total(),
                ratio,
                expected_ratio,
                ratio_within_5pct,
                wall_seconds: timing.then_some(elapsed),
            });
            prev = Some(total);
            n += 1;
        }
    }
    Ok(BenchReport {
        all_within_bound: rows.iter().all(|r| r.within_bound),
        all_ratios_within_5pct: rows.iter().all(|r| r.ratio_within_5pct != Some(false)),
        rows,
    })
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.bases.iter().any(|&b| b < 2) {
        return Err(CliError::Usage("bases must be at least 2".into()));
    }
    let report = bench(&a.bases, a.min_n, a.max_len, a.timing)?;
    emit(out, a.out.as_deref(), &to_json(&report))?;
    if !report.all_within_bound || !report.all_ratios_within_5pct {
        return Err(CliError::CheckFailed("work bound or growth ratio violated".into()));
    }
    Ok(())
}
