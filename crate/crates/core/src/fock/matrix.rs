use std::collections::HashMap;
use std::io::Write;
use std::sync::{Arc, Mutex, OnceLock};

use ndarray::{s, Array2, ArrayView2};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::series::{SeriesConfig, SeriesEngine};
use super::switch::{SwitchFunction, SwitchKind};
use super::symbol::{Axis, PlanarSymbol};
use crate::error::{Error, Result};

/// Largest matrix size built unless the caller raises the cap.
pub const DEFAULT_MAX_SIZE: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisTag {
    FockLll,
    LandauLevel(usize),
    /// Levels `0..=ℓ` interleaved by angular-momentum label.
    Cumulative(usize),
    Hardy,
}

/// One orthonormal basis vector: Landau level and angular-momentum label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisMember {
    pub level: usize,
    pub label: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzMatrix {
    entries: Array2<Complex64>,
    symbol: PlanarSymbol,
    basis_tag: BasisTag,
    basis: Vec<BasisMember>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuildOptions {
    pub max_size: usize,
    pub series: SeriesConfig,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            max_size: DEFAULT_MAX_SIZE,
            series: SeriesConfig::default(),
        }
    }
}

impl BuildOptions {
    pub(crate) fn check_size(&self, size: usize) -> Result<()> {
        if size == 0 {
            return Err(Error::InvalidParameter("matrix size must be at least 1".into()));
        }
        if size > self.max_size {
            return Err(Error::ResourceLimit {
                requested: size,
                max: self.max_size,
            });
        }
        Ok(())
    }
}

impl ToeplitzMatrix {
    pub(crate) fn from_parts(
        entries: Array2<Complex64>,
        symbol: PlanarSymbol,
        basis_tag: BasisTag,
        basis: Vec<BasisMember>,
    ) -> Self {
        debug_assert_eq!(entries.nrows(), basis.len());
        Self {
            entries,
            symbol,
            basis_tag,
            basis,
        }
    }

    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> ArrayView2<'_, Complex64> {
        self.entries.view()
    }

    pub fn symbol(&self) -> &PlanarSymbol {
        &self.symbol
    }

    pub fn basis_tag(&self) -> BasisTag {
        self.basis_tag
    }

    pub fn basis(&self) -> &[BasisMember] {
        &self.basis
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[[row, col]]
    }

    /// The leading `size x size` block.
    pub fn leading(&self, size: usize) -> Result<Self> {
        if size == 0 || size > self.size() {
            return Err(Error::DimensionMismatch(format!(
                "cannot take a {size}x{size} block of a {n}x{n} matrix",
                n = self.size()
            )));
        }
        Ok(Self {
            entries: self.entries.slice(s![..size, ..size]).to_owned(),
            symbol: self.symbol,
            basis_tag: self.basis_tag,
            basis: self.basis[..size].to_vec(),
        })
    }

    /// Largest `|A - A^*|` entry.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.size();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.entries[[i, j]] - self.entries[[j, i]].conj()).norm());
            }
        }
        worst
    }

    /// Writes `m,n,re,im` rows with 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(
            out,
            "# symbol={} axis={} b={} M={}",
            self.symbol.profile.label(),
            self.symbol.axis.name(),
            self.symbol.field_strength(),
            self.size()
        )?;
        writeln!(out, "m,n,re,im")?;
        for (i, row) in self.basis.iter().enumerate() {
            for (j, col) in self.basis.iter().enumerate() {
                let v = self.entries[[i, j]];
                writeln!(out, "{},{},{:.16e},{:.16e}", row.label, col.label, v.re, v.im)?;
            }
        }
        Ok(())
    }
}

/// `T_f` for the symbol on the lowest Landau level, indices `0..size`.
pub fn build_toeplitz(symbol: &PlanarSymbol, size: usize) -> Result<ToeplitzMatrix> {
    build_toeplitz_with(symbol, size, &BuildOptions::default())
}

pub fn build_toeplitz_with(
    symbol: &PlanarSymbol,
    size: usize,
    options: &BuildOptions,
) -> Result<ToeplitzMatrix> {
    options.check_size(size)?;
    let real = axis_first_block(&symbol.effective_profile(), size, options.series)?;
    let labels: Vec<i64> = (0..size as i64).collect();
    let entries = rotate(real.slice(s![..size, ..size]), &labels, &labels, symbol.axis);
    let basis = labels.iter().map(|&label| BasisMember { level: 0, label }).collect();
    Ok(ToeplitzMatrix::from_parts(entries, *symbol, BasisTag::FockLll, basis))
}

/// A single entry `⟨φ_m, f φ_n⟩`.
pub fn matrix_element(m: i64, n: i64, symbol: &PlanarSymbol) -> Result<Complex64> {
    for idx in [m, n] {
        if idx < 0 {
            return Err(Error::IndexOutOfRange { index: idx, min: 0 });
        }
    }
    let (mu, nu) = (m as usize, n as usize);
    let engine = SeriesEngine::new(&symbol.effective_profile(), mu.max(nu), SeriesConfig::default());
    let v = engine.entry(mu, nu)?;
    Ok(axis_phase(symbol.axis, n - m) * v)
}

/// `i^{d}` for the second axis, where the symbol is the first-axis one
/// rotated by a quarter turn and `φ_n(i z) = iⁿ φ_n(z)`.
pub(crate) fn axis_phase(axis: Axis, d: i64) -> Complex64 {
    match axis {
        Axis::First => Complex64::new(1.0, 0.0),
        Axis::Second => match d.rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        },
    }
}

pub(crate) fn rotate(
    real: ArrayView2<f64>,
    row_labels: &[i64],
    col_labels: &[i64],
    axis: Axis,
) -> Array2<Complex64> {
    Array2::from_shape_fn(real.dim(), |(i, j)| {
        axis_phase(axis, col_labels[j] - row_labels[i]) * real[[i, j]]
    })
}

type ProfileKey = (u8, u64, u64);

fn profile_key(profile: &SwitchFunction) -> ProfileKey {
    match profile.kind() {
        SwitchKind::Heaviside { a } => (0, a.to_bits(), 0),
        SwitchKind::LinearRamp { c, d } => (1, c.to_bits(), d.to_bits()),
        SwitchKind::ErfRamp { center, width } => (2, center.to_bits(), width.to_bits()),
    }
}

type BlockCache = Mutex<HashMap<(ProfileKey, SeriesConfig), Arc<Array2<f64>>>>;

fn block_cache() -> &'static BlockCache {
    static CACHE: OnceLock<BlockCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

const CACHE_PROFILES: usize = 16;

/// Real symmetric first-axis matrix at `b = 2` of at least `size x size`.
/// Entries do not depend on the size, so blocks are cached per profile and
/// grown on demand.
pub(crate) fn axis_first_block(
    profile: &SwitchFunction,
    size: usize,
    config: SeriesConfig,
) -> Result<Arc<Array2<f64>>> {
    let key = (profile_key(profile), config);
    let previous = block_cache().lock().unwrap().get(&key).cloned();
    if let Some(block) = &previous {
        if block.nrows() >= size {
            return Ok(block.clone());
        }
    }
    let known = previous.as_ref().map_or(0, |b| b.nrows());
    let engine = SeriesEngine::new(profile, size - 1, config);
    let rows: Vec<Result<Vec<f64>>> = (0..size)
        .into_par_iter()
        .map(|m| {
            let start = if m < known { known } else { m };
            (start..size).map(|n| engine.entry(m, n)).collect()
        })
        .collect();

    let mut block = Array2::<f64>::zeros((size, size));
    if let Some(prev) = &previous {
        block.slice_mut(s![..known, ..known]).assign(prev.as_ref());
    }
    for (m, row) in rows.into_iter().enumerate() {
        let start = if m < known { known } else { m };
        for (offset, v) in row?.into_iter().enumerate() {
            let n = start + offset;
            block[[m, n]] = v;
            block[[n, m]] = v;
        }
    }
    let block = Arc::new(block);
    let mut cache = block_cache().lock().unwrap();
    if cache.len() >= CACHE_PROFILES && !cache.contains_key(&key) {
        cache.clear();
    }
    cache.insert(key, block.clone());
    Ok(block)
}
