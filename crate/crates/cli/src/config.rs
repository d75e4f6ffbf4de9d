//! Flat `key = value` settings, merged from a config file and the command
//! line, then validated into an [`ExperimentConfig`] before any work starts.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, Context, Result};

use principal_trace::fock::matrix::DEFAULT_MAX_SIZE;
use principal_trace::poisson::Region;
use principal_trace::trace::Ordering;
use principal_trace::{BuildOptions, SeriesConfig, SwitchFunction};

use crate::Failure;

pub const MAX_M_ENV: &str = "PRINCIPAL_TRACE_MAX_M";

/// Every key a config file may set. Command-line flags use the same names
/// with `-` in place of `_`.
pub const KEYS: &[&str] = &[
    "symbol", "a", "c", "d", "width", "b", "M", "window", "extrapolate", "format", "out",
    "threads", "precision_bits", "max_M", "word_n", "plus", "minus", "p", "q", "region",
    "multiplier", "ordering", "tolerance", "f", "g", "level", "cumulative", "count", "shift",
];

/// Raw settings; later layers override earlier ones.
#[derive(Debug, Default, Clone)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<()> {
        let key = canonical(key);
        if !KEYS.contains(&key.as_str()) {
            return Err(anyhow!(Failure::Config(format!("unknown setting `{key}`"))));
        }
        self.values.insert(key, value.into());
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn load_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .with_context(|| Failure::Config(format!("cannot read config file {}", path.display())))?;
        self.merge_text(&text)
            .with_context(|| format!("in config file {}", path.display()))
    }

    pub fn merge_text(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                anyhow!(Failure::Config(format!("line {}: expected `key = value`", i + 1)))
            })?;
            self.set(key.trim(), value.trim())
                .with_context(|| format!("line {}", i + 1))?;
        }
        Ok(())
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: fmt::Display,
    {
        self.get(key)
            .map(|v| {
                v.parse::<T>().map_err(|e| {
                    anyhow!(Failure::Config(format!("invalid value `{v}` for `{key}`: {e}")))
                })
            })
            .transpose()
    }

    fn or<T: FromStr>(&self, key: &str, default: T) -> Result<T>
    where
        T::Err: fmt::Display,
    {
        Ok(self.parsed(key)?.unwrap_or(default))
    }

    fn text(&self, key: &str, default: &str) -> String {
        self.get(key).unwrap_or(default).to_string()
    }
}

fn canonical(key: &str) -> String {
    let key = key.trim().replace('-', "_");
    match key.as_str() {
        "m" => "M".into(),
        "max_m" => "max_M".into(),
        _ => key,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err("expected csv or json".into()),
        }
    }
}

/// Trace window as requested: a fixed `N`, the whole truncation, or `M/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    Half,
    Full,
    Fixed(usize),
}

impl Window {
    /// Window for outer size `size`, keeping the ratio `N/M` of the request.
    pub fn at(self, size: usize, requested_outer: usize) -> usize {
        match self {
            Window::Half => (size / 2).max(1),
            Window::Full => size,
            Window::Fixed(n) => ((n as u128 * size as u128) / requested_outer as u128).max(1) as usize,
        }
    }
}

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "full" => Ok(Window::Full),
            "half" => Ok(Window::Half),
            n => n
                .parse::<usize>()
                .map(Window::Fixed)
                .map_err(|_| "expected a positive integer, `half` or `full`".into()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub profile: SwitchFunction,
    pub b: f64,
    pub outer: usize,
    pub window: Window,
    pub extrapolate: bool,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub build: BuildOptions,
    pub word_n: usize,
    pub plus: String,
    pub minus: String,
    pub p: String,
    pub q: String,
    pub region: Region,
    pub multiplier: i64,
    pub ordering: Ordering,
    pub tolerance: f64,
    pub f: String,
    pub g: String,
    pub level: usize,
    pub cumulative: bool,
    pub count: usize,
    pub shift: f64,
}

fn invalid(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Failure::Config(msg.into()))
}

fn profile(s: &Settings) -> Result<SwitchFunction> {
    let kind = s.text("symbol", "heaviside");
    let built = match kind.as_str() {
        "heaviside" => SwitchFunction::heaviside(s.or("a", 0.0)?),
        "linear_ramp" => SwitchFunction::linear_ramp(s.or("c", -1.0)?, s.or("d", 1.0)?),
        "erf_ramp" => SwitchFunction::erf_ramp(s.or("a", 0.0)?, s.or("width", 1.0)?),
        other => {
            return Err(invalid(format!(
                "unknown symbol `{other}` (expected heaviside, linear_ramp or erf_ramp)"
            )))
        }
    };
    built.map_err(|e| invalid(e.to_string()))
}

fn region(name: &str) -> Result<Region> {
    match name {
        "square" => Ok(Region::UnitSquare),
        "disc" => Ok(Region::UnitDisc),
        other => Err(invalid(format!("unknown region `{other}` (expected square or disc)"))),
    }
}

/// Resource cap: the smaller of `max_M` and the environment variable.
fn max_outer(s: &Settings) -> Result<usize> {
    let mut cap = s.or("max_M", DEFAULT_MAX_SIZE)?;
    if let Ok(v) = std::env::var(MAX_M_ENV) {
        let env_cap: usize = v
            .trim()
            .parse()
            .map_err(|_| invalid(format!("{MAX_M_ENV}=`{v}` is not a positive integer")))?;
        cap = cap.min(env_cap);
    }
    Ok(cap)
}

impl ExperimentConfig {
    pub fn from_settings(s: &Settings) -> Result<Self> {
        let b: f64 = s.or("b", 2.0)?;
        if !(b.is_finite() && b > 0.0) {
            return Err(invalid(format!("field strength b must be positive, got {b}")));
        }
        let outer: usize = s.or("M", 256)?;
        if outer == 0 {
            return Err(invalid("M must be at least 1"));
        }
        let window: Window = s.or("window", Window::Half)?;
        if let Window::Fixed(n) = window {
            if n == 0 || n > outer {
                return Err(invalid(format!("window N={n} must satisfy 1 <= N <= M={outer}")));
            }
        }
        let max_size = max_outer(s)?;
        if outer > max_size {
            return Err(anyhow!(Failure::ResourceCap { requested: outer, max: max_size }));
        }
        let mut series = SeriesConfig::default();
        if let Some(bits) = s.parsed::<usize>("precision_bits")? {
            if bits == 0 {
                return Err(invalid("precision_bits must be positive"));
            }
            series.margin_bits = bits;
        }
        let threads: Option<usize> = s.parsed("threads")?;
        if threads == Some(0) {
            return Err(invalid("threads must be at least 1"));
        }
        let word_n: usize = s.or("word_n", 1)?;
        if word_n == 0 {
            return Err(invalid("word_n must be at least 1"));
        }
        let tolerance: f64 = s.or("tolerance", 5e-3)?;
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(invalid("tolerance must be positive"));
        }
        let shift: f64 = s.or("shift", 2.5)?;
        if !shift.is_finite() {
            return Err(invalid("shift must be finite"));
        }
        let count: usize = s.or("count", 16)?;
        if count == 0 {
            return Err(invalid("count must be at least 1"));
        }
        Ok(Self {
            profile: profile(s)?,
            b,
            outer,
            window,
            extrapolate: s.or("extrapolate", false)?,
            format: s.or("format", Format::Csv)?,
            out: s.get("out").map(PathBuf::from),
            threads,
            build: BuildOptions { max_size, series },
            word_n,
            plus: s.text("plus", ""),
            minus: s.text("minus", ""),
            p: s.text("p", "x"),
            q: s.text("q", "y"),
            region: region(&s.text("region", "square"))?,
            multiplier: s.or("multiplier", -1)?,
            ordering: s
                .text("ordering", "left_normal")
                .parse()
                .map_err(|e: principal_trace::Error| invalid(e.to_string()))?,
            tolerance,
            f: s.text("f", "-1:1"),
            g: s.text("g", "1:1"),
            level: s.or("level", 1)?,
            cumulative: s.or("cumulative", false)?,
            count,
            shift,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let mut s = Settings::default();
        s.merge_text("# sweep\nM = 128\nwindow = 32  # quarter\nsymbol = linear_ramp\n").unwrap();
        s.set("window", "full").unwrap();
        let c = ExperimentConfig::from_settings(&s).unwrap();
        assert_eq!((c.outer, c.window), (128, Window::Full));
        assert_eq!(c.profile, SwitchFunction::linear_ramp(-1.0, 1.0).unwrap());
    }

    #[test]
    fn defaults() {
        let c = ExperimentConfig::from_settings(&Settings::default()).unwrap();
        assert_eq!((c.outer, c.window.at(256, 256), c.b), (256, 128, 2.0));
        assert_eq!(c.format, Format::Csv);
        assert_eq!(c.profile, SwitchFunction::heaviside(0.0).unwrap());
    }

    #[test]
    fn rejects_bad_values() {
        let mut s = Settings::default();
        assert!(s.set("colour", "red").is_err());
        assert!(s.merge_text("M 12").is_err());
        for (k, v) in [("M", "0"), ("b", "-1"), ("window", "300"), ("format", "xml"), ("symbol", "step")] {
            let mut s = Settings::default();
            s.set(k, v).unwrap();
            let e = ExperimentConfig::from_settings(&s).unwrap_err();
            assert!(matches!(e.downcast_ref::<Failure>(), Some(Failure::Config(_))), "{k}={v}");
        }
    }

    #[test]
    fn fixed_window_keeps_ratio() {
        assert_eq!(Window::Fixed(64).at(128, 256), 32);
        assert_eq!(Window::Full.at(64, 256), 64);
    }
}
