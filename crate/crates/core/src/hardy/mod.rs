//! Toeplitz operators on the Hardy space with Laurent-polynomial symbols,
//! in exact arithmetic.
//!
//! `T_f` has entries `f_{m−n}` in the basis `zⁿ`, so `T_z` is the unilateral
//! shift and `[T_{z̄}, T_z]` is the projection onto constants.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poisson::{integrate_unit_disc, poisson_bracket, Cursor, GaussianRational, QPolynomial2};

/// `Σ_k c_k z^k` on the unit circle, finitely many `k ∈ Z`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentSymbol {
    coefficients: BTreeMap<i64, GaussianRational>,
}

impl LaurentSymbol {
    pub fn new<I: IntoIterator<Item = (i64, GaussianRational)>>(terms: I) -> Self {
        let mut s = Self::default();
        for (k, c) in terms {
            s.add_term(k, &c);
        }
        s
    }

    pub fn monomial(k: i64, c: GaussianRational) -> Self {
        Self::new([(k, c)])
    }

    pub fn z() -> Self {
        Self::monomial(1, GaussianRational::from(1))
    }

    pub fn z_bar() -> Self {
        Self::monomial(-1, GaussianRational::from(1))
    }

    pub fn add_term(&mut self, k: i64, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let e = self.coefficients.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.coefficients.remove(&k);
        }
    }

    pub fn coefficient(&self, k: i64) -> GaussianRational {
        self.coefficients.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &GaussianRational)> {
        self.coefficients.iter()
    }

    /// `max |k|` over nonzero coefficients.
    pub fn bandwidth(&self) -> usize {
        self.coefficients.keys().map(|k| k.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Parses `k:c` pairs separated by commas, e.g. `1:1, -1:1/2, 2:(1/3-2i)`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let mut out = Self::default();
        if cur.at_end() {
            return Err(Error::parse(0, "empty Laurent symbol"));
        }
        loop {
            let k = cur.integer()?;
            cur.expect(':')?;
            let c = if cur.eat('(') {
                let c = cur.literal()?;
                cur.expect(')')?;
                c
            } else {
                cur.literal()?
            };
            out.add_term(k, &c);
            if cur.at_end() {
                return Ok(out);
            }
            if !cur.eat(',') {
                return Err(cur.unexpected("',' or end of input"));
            }
        }
    }
}

impl fmt::Display for LaurentSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0:0");
        }
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .map(|(k, c)| if c.is_real() { format!("{k}:{c}") } else { format!("{k}:({c})") })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `L x L` section of `T_f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HardyToeplitzMatrix {
    size: usize,
    entries: Vec<GaussianRational>,
}

impl HardyToeplitzMatrix {
    pub fn new(symbol: &LaurentSymbol, size: usize) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for m in 0..size {
            for n in 0..size {
                entries.push(symbol.coefficient(m as i64 - n as i64));
            }
        }
        Self { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, m: usize, n: usize) -> &GaussianRational {
        &self.entries[m * self.size + n]
    }

    /// `(self · other)_{mm}`.
    pub fn product_diagonal(&self, other: &Self, m: usize) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for k in 0..self.size {
            let a = self.get(m, k);
            if a.is_zero() {
                continue;
            }
            acc += &(a * other.get(k, m));
        }
        acc
    }
}

/// Smallest section size for which the windowed trace is exact.
pub fn minimal_section(f: &LaurentSymbol, g: &LaurentSymbol) -> usize {
    2 * (f.bandwidth() + g.bandwidth()) + 2
}

/// `Tr[T_f, T_g]`, exact.
pub fn exact_commutator_trace(f: &LaurentSymbol, g: &LaurentSymbol) -> GaussianRational {
    exact_commutator_trace_sized(f, g, minimal_section(f, g)).expect("minimal section is admissible")
}

/// `Tr[T_f, T_g]` from `size x size` sections, summing the diagonal over the
/// first `size/2` indices. Those diagonal entries coincide with the infinite
/// operator's, and the commutator vanishes beyond index `K_f + K_g`.
pub fn exact_commutator_trace_sized(f: &LaurentSymbol, g: &LaurentSymbol, size: usize) -> Result<GaussianRational> {
    let min = minimal_section(f, g);
    if size < min {
        return Err(Error::InvalidParameter(format!(
            "section size {size} is below the exact minimum {min}"
        )));
    }
    let tf = HardyToeplitzMatrix::new(f, size);
    let tg = HardyToeplitzMatrix::new(g, size);
    let mut trace = GaussianRational::zero();
    for m in 0..size / 2 {
        trace += &tf.product_diagonal(&tg, m);
        trace -= &tg.product_diagonal(&tf, m);
    }
    Ok(trace)
}

fn extend(f: &LaurentSymbol, negative_power: impl Fn(u32) -> QPolynomial2) -> QPolynomial2 {
    let z = QPolynomial2::from_terms([((1, 0), GaussianRational::from(1)), ((0, 1), GaussianRational::i())]);
    let mut out = QPolynomial2::zero();
    for (k, c) in f.terms() {
        let base = if *k >= 0 { z.pow(*k as u32) } else { negative_power(k.unsigned_abs() as u32) };
        out = &out + &base.scale(c);
    }
    out
}

fn z_bar_poly() -> QPolynomial2 {
    QPolynomial2::from_terms([((1, 0), GaussianRational::from(1)), ((0, 1), -GaussianRational::i())])
}

/// `z^k -> (x+iy)^k`, `z^{−k} -> (x−iy)^k`.
pub fn harmonic_extension(f: &LaurentSymbol) -> QPolynomial2 {
    extend(f, |k| z_bar_poly().pow(k))
}

/// `z^{−k} -> (x−iy)^k (x²+y²)`: agrees with [`harmonic_extension`] on the
/// circle but not inside the disc.
pub fn alternative_extension(f: &LaurentSymbol) -> QPolynomial2 {
    let r2 = QPolynomial2::from_terms([((2, 0), GaussianRational::from(1)), ((0, 2), GaussianRational::from(1))]);
    extend(f, |k| &z_bar_poly().pow(k) * &r2)
}

/// `(1/2πi) ∫_D {f̃, g̃}`. The disc integral is a multiple of `π`, which cancels.
pub fn disc_side(f_ext: &QPolynomial2, g_ext: &QPolynomial2) -> GaussianRational {
    let integral = integrate_unit_disc(&poisson_bracket(f_ext, g_ext));
    debug_assert!(integral.rational_part.is_zero());
    // π·s / (2πi) = −i s / 2
    let minus_half_i = GaussianRational::new(BigRational::zero(), BigRational::new((-1).into(), 2.into()));
    &integral.pi_part * &minus_half_i
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeltonHoweCheck {
    #[serde(serialize_with = "as_string")]
    pub lhs: GaussianRational,
    #[serde(serialize_with = "as_string")]
    pub rhs: GaussianRational,
    pub equal: bool,
}

fn as_string<S: serde::Serializer>(v: &GaussianRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Compares the finite commutator trace with the disc integral of the
/// bracket of harmonic extensions.
pub fn helton_howe_check(f: &LaurentSymbol, g: &LaurentSymbol) -> HeltonHoweCheck {
    let lhs = exact_commutator_trace(f, g);
    let rhs = disc_side(&harmonic_extension(f), &harmonic_extension(g));
    let equal = lhs == rhs;
    HeltonHoweCheck { lhs, rhs, equal }
}
