//! `principal-trace`: experiment runner for windowed commutator traces.
//!
//! Exit codes: 0 success, 1 computation failed or a comparison missed its
//! tolerance, 2 invalid configuration or unparsable input, 3 resource cap
//! exceeded, 4 output not writable.

mod config;
mod report;
mod run;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use config::{ExperimentConfig, Settings};

/// Failure classes that decide the exit code.
#[derive(Debug)]
pub enum Failure {
    Config(String),
    ResourceCap { requested: usize, max: usize },
    Output(String),
    Mismatch,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Config(m) => write!(f, "invalid configuration: {m}"),
            Failure::ResourceCap { requested, max } => write!(
                f,
                "M={requested} exceeds the cap {max} (set by max_M or {})",
                config::MAX_M_ENV
            ),
            Failure::Output(p) => write!(f, "cannot write report to {p}"),
            Failure::Mismatch => write!(f, "numeric and exact values differ by more than the tolerance"),
        }
    }
}

impl std::error::Error for Failure {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(f) = err.downcast_ref::<Failure>() {
        return match f {
            Failure::Config(_) => 2,
            Failure::ResourceCap { .. } => 3,
            Failure::Output(_) => 4,
            Failure::Mismatch => 1,
        };
    }
    match err.chain().find_map(|e| e.downcast_ref::<principal_trace::Error>()) {
        Some(principal_trace::Error::ResourceLimit { .. }) => 3,
        Some(principal_trace::Error::PrecisionLoss { .. }) | None => 1,
        Some(_) => 2,
    }
}

#[derive(Parser, Debug)]
#[command(name = "principal-trace", version, about = "Windowed trace experiments for Toeplitz operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

/// Flags shared by every subcommand. Each one overrides the key of the same
/// name in `--config`.
#[derive(Args, Debug, Default)]
struct Common {
    /// Flat `key = value` settings file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Report file; stdout when absent.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,
    /// csv or json.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Outer truncation size.
    #[arg(long = "M", global = true)]
    m: Option<String>,
    /// Trace window N, `half` or `full`.
    #[arg(long, global = true)]
    window: Option<String>,
    /// Magnetic field strength.
    #[arg(long, global = true)]
    b: Option<String>,
    /// heaviside, linear_ramp or erf_ramp.
    #[arg(long, global = true)]
    symbol: Option<String>,
    /// Heaviside threshold or erf ramp center.
    #[arg(long, global = true, allow_hyphen_values = true)]
    a: Option<String>,
    /// Linear ramp start.
    #[arg(long, global = true, allow_hyphen_values = true)]
    c: Option<String>,
    /// Linear ramp end.
    #[arg(long, global = true, allow_hyphen_values = true)]
    d: Option<String>,
    /// Erf ramp width.
    #[arg(long, global = true)]
    width: Option<String>,
    /// Worker threads for matrix builds and traces.
    #[arg(long, global = true)]
    threads: Option<String>,
    /// Guard bits added to the series working precision.
    #[arg(long = "precision-bits", global = true)]
    precision_bits: Option<String>,
    /// Largest admissible M.
    #[arg(long = "max-M", global = true)]
    max_m: Option<String>,
    /// Richardson-extrapolate the sweep.
    #[arg(long, global = true, num_args = 0..=1, default_missing_value = "true")]
    extrapolate: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convergence table of 2πi·Tr[A,B] (or of the n-th word) over M.
    Trace(WordArgs),
    /// Diagonal summands and running sums of a word difference.
    Word(WordListArgs),
    /// Exact trace prediction from the principal function.
    Chhp(ChhpArgs),
    /// Numeric trace against the exact square integral.
    Compare(CompareArgs),
    /// Exact Hardy-space trace formula check.
    Hardy(HardyArgs),
    /// Convergence table on a Landau level.
    Landau(LandauArgs),
    /// Weights of the lowest-level weighted shift.
    ShiftWeights(CountArgs),
    /// Numerical check of ∫ Λ(x+a) − Λ(x) dx = a.
    SwitchCheck(ShiftArgs),
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Use (AB)ⁿ − (BA)ⁿ instead of the commutator.
    #[arg(long = "word-n")]
    word_n: Option<String>,
}

#[derive(Args, Debug)]
struct WordListArgs {
    #[command(flatten)]
    word: WordArgs,
    /// Comma-separated words counted with +1, e.g. `ABAB`.
    #[arg(long)]
    plus: Option<String>,
    /// Comma-separated words counted with −1.
    #[arg(long)]
    minus: Option<String>,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
}

#[derive(Args, Debug)]
struct ChhpArgs {
    #[command(flatten)]
    poly: PolyArgs,
    /// square or disc.
    #[arg(long)]
    region: Option<String>,
    /// Integer value of the principal function on the region.
    #[arg(long, allow_hyphen_values = true)]
    multiplier: Option<String>,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[command(flatten)]
    poly: PolyArgs,
    /// left_normal or right_normal.
    #[arg(long)]
    ordering: Option<String>,
    #[arg(long)]
    tolerance: Option<String>,
}

#[derive(Args, Debug)]
struct HardyArgs {
    /// Laurent symbol `k:c, …`, e.g. `-1:1` for z̄.
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
}

#[derive(Args, Debug)]
struct LandauArgs {
    #[command(flatten)]
    word: WordArgs,
    #[arg(long)]
    level: Option<String>,
    /// Use the levels 0..=level together.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    cumulative: Option<String>,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long)]
    count: Option<String>,
}

#[derive(Args, Debug)]
struct ShiftArgs {
    /// Translation amount a.
    #[arg(long, allow_hyphen_values = true)]
    shift: Option<String>,
}

fn overlay(s: &mut Settings, pairs: &[(&str, &Option<String>)]) -> Result<()> {
    for (key, value) in pairs {
        if let Some(v) = value {
            s.set(key, v.as_str())?;
        }
    }
    Ok(())
}

fn settings(cli: &Cli) -> Result<Settings> {
    let mut s = Settings::default();
    let c = &cli.common;
    if let Some(path) = &c.config {
        s.load_file(path)?;
    }
    overlay(
        &mut s,
        &[
            ("out", &c.out),
            ("format", &c.format),
            ("M", &c.m),
            ("window", &c.window),
            ("b", &c.b),
            ("symbol", &c.symbol),
            ("a", &c.a),
            ("c", &c.c),
            ("d", &c.d),
            ("width", &c.width),
            ("threads", &c.threads),
            ("precision_bits", &c.precision_bits),
            ("max_M", &c.max_m),
            ("extrapolate", &c.extrapolate),
        ],
    )?;
    match &cli.command {
        Command::Trace(w) => overlay(&mut s, &[("word_n", &w.word_n)]),
        Command::Word(w) => overlay(
            &mut s,
            &[("word_n", &w.word.word_n), ("plus", &w.plus), ("minus", &w.minus)],
        ),
        Command::Chhp(a) => overlay(
            &mut s,
            &[
                ("p", &a.poly.p),
                ("q", &a.poly.q),
                ("region", &a.region),
                ("multiplier", &a.multiplier),
            ],
        ),
        Command::Compare(a) => overlay(
            &mut s,
            &[
                ("p", &a.poly.p),
                ("q", &a.poly.q),
                ("ordering", &a.ordering),
                ("tolerance", &a.tolerance),
            ],
        ),
        Command::Hardy(a) => overlay(&mut s, &[("f", &a.f), ("g", &a.g)]),
        Command::Landau(a) => overlay(
            &mut s,
            &[
                ("word_n", &a.word.word_n),
                ("level", &a.level),
                ("cumulative", &a.cumulative),
            ],
        ),
        Command::ShiftWeights(a) => overlay(&mut s, &[("count", &a.count)]),
        Command::SwitchCheck(a) => overlay(&mut s, &[("shift", &a.shift)]),
    }?;
    Ok(s)
}

fn execute(cli: &Cli) -> Result<()> {
    let cfg = ExperimentConfig::from_settings(&settings(cli)?)?;
    if let Some(n) = cfg.threads {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let mut verdict = true;
    let table = match &cli.command {
        Command::Trace(_) => run::trace(&cfg)?,
        Command::Word(_) => run::word(&cfg)?,
        Command::Chhp(_) => run::chhp(&cfg)?,
        Command::Compare(_) => {
            let (t, pass) = run::compare(&cfg)?;
            verdict = pass;
            t
        }
        Command::Hardy(_) => run::hardy(&cfg)?,
        Command::Landau(_) => run::landau(&cfg)?,
        Command::ShiftWeights(_) => run::shift_weights(&cfg)?,
        Command::SwitchCheck(_) => run::switch_check(&cfg)?,
    };
    report::emit(&table, cfg.format, cfg.out.as_deref())?;
    if !verdict {
        return Err(Failure::Mismatch.into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
