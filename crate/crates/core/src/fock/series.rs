//! Extended-precision evaluation of Fock–Toeplitz matrix elements.
//!
//! With `φ_n(z) = zⁿ e^{−|z|²/2} / sqrt(π n!)` and a symbol `Λ(x)`, the
//! generating function `Σ I_{mn} sᵐ tⁿ / (m! n!) = π e^{st} Λ̃((s+t)/2)`
//! gives
//!
//! ```text
//! A_{mn} = Σ_j Λ̃^{(k)}(0) 2^{−k} sqrt(m! n!) / ((m−j)! (n−j)! j!),   k = m + n − 2j.
//! ```
//!
//! The terms grow like `2^{(m+n)/2}` while the sum stays O(1), so the sum is
//! carried out in binary floating point with `m + n + margin` bits. The
//! transcendental prefactors of each Hermite family factor out of the sum and
//! are applied in double precision afterwards.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use dashu_float::FBig;

use super::switch::{HermiteFamily, SwitchFunction, TaylorData};
use crate::error::{Error, Result};
use crate::special::ln_factorial;

type Big = FBig;

/// Working-precision policy for the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesConfig {
    /// Extra bits on top of `m + n`.
    pub margin_bits: usize,
    /// Recompute each entry at twice the precision and require agreement.
    pub validate: bool,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            margin_bits: 64,
            validate: true,
        }
    }
}

/// Entries that must agree between the working and the doubled precision.
pub const VALIDATION_TOLERANCE: f64 = 1e-9;

const BUCKET_BITS: usize = 64;

struct Tables {
    inv_sqrt_fact: Vec<Big>,
    families: Vec<Vec<Big>>,
}

/// Precomputed tables for one smoothed profile, valid for indices up to
/// `max_index`.
pub struct SeriesEngine {
    taylor: TaylorData,
    max_index: usize,
    config: SeriesConfig,
    exact: Tables,
    rounded: Mutex<HashMap<usize, Arc<Tables>>>,
}

fn big_from_f64(x: f64) -> Big {
    Big::try_from(x).expect("finite parameter")
}

fn with_precision(x: &Big, bits: usize) -> Big {
    x.clone().with_precision(bits).value()
}

impl SeriesEngine {
    pub fn new(profile: &SwitchFunction, max_index: usize, config: SeriesConfig) -> Self {
        let taylor = profile.smoothed().taylor_at(0.0);
        let top = Self::precision_for(max_index, max_index, config.margin_bits) * 2 + BUCKET_BITS;

        let mut inv_sqrt_fact = Vec::with_capacity(max_index + 1);
        inv_sqrt_fact.push(with_precision(&Big::ONE, top));
        for k in 1..=max_index {
            let root = with_precision(&Big::from(k as u64), top).sqrt();
            let next = &inv_sqrt_fact[k - 1] / root;
            inv_sqrt_fact.push(next);
        }

        let max_order = 2 * max_index;
        let families = taylor
            .families
            .iter()
            .map(|fam| hermite_table(fam, max_order.saturating_sub(fam.start), top))
            .collect();

        Self {
            taylor,
            max_index,
            config,
            exact: Tables {
                inv_sqrt_fact,
                families,
            },
            rounded: Mutex::new(HashMap::new()),
        }
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn config(&self) -> SeriesConfig {
        self.config
    }

    fn precision_for(m: usize, n: usize, margin: usize) -> usize {
        (m + n + margin).div_ceil(BUCKET_BITS) * BUCKET_BITS
    }

    fn tables(&self, bits: usize) -> Arc<Tables> {
        let mut cache = self.rounded.lock().unwrap();
        cache
            .entry(bits)
            .or_insert_with(|| {
                Arc::new(Tables {
                    inv_sqrt_fact: self
                        .exact
                        .inv_sqrt_fact
                        .iter()
                        .map(|x| with_precision(x, bits))
                        .collect(),
                    families: self
                        .exact
                        .families
                        .iter()
                        .map(|t| t.iter().map(|x| with_precision(x, bits)).collect())
                        .collect(),
                })
            })
            .clone()
    }

    /// Axis-first matrix element `⟨φ_m, Λ(x) φ_n⟩` at `b = 2`.
    pub fn entry(&self, m: usize, n: usize) -> Result<f64> {
        assert!(m <= self.max_index && n <= self.max_index, "index beyond engine tables");
        let bits = Self::precision_for(m, n, self.config.margin_bits);
        let value = self.entry_at(m, n, bits);
        if self.config.validate {
            let check = self.entry_at(m, n, 2 * bits);
            let difference = (value - check).abs();
            if !(difference <= VALIDATION_TOLERANCE) {
                return Err(Error::PrecisionLoss { m, n, difference });
            }
        }
        Ok(value)
    }

    fn entry_at(&self, m: usize, n: usize, bits: usize) -> f64 {
        let tables = self.tables(bits);
        let families = &self.taylor.families;
        let jmax = m.min(n);

        // coef_j = 2^{-k} sqrt(m! n!) / ((m-j)! (n-j)! j!)
        let mut coef = (&tables.inv_sqrt_fact[m] * &tables.inv_sqrt_fact[n]) >> (m + n) as isize;
        let mut sums: Vec<Big> = vec![with_precision(&Big::ZERO, bits); families.len()];
        for j in 0..=jmax {
            let k = m + n - 2 * j;
            for (f, fam) in families.iter().enumerate() {
                if k >= fam.start {
                    sums[f] += &tables.families[f][k - fam.start] * &coef;
                }
            }
            if j < jmax {
                coef *= 4 * ((m - j) as u64) * ((n - j) as u64);
                coef /= (j + 1) as u64;
            }
        }

        let mut value: f64 = families
            .iter()
            .zip(&sums)
            .map(|(fam, s)| fam.prefactor * s.to_f64().value())
            .sum();
        if m == n {
            value += self.taylor.value;
        }
        for &(order, deriv) in &self.taylor.low_orders {
            value += deriv * low_order_coefficient(m, n, order);
        }
        value
    }
}

/// `2^{-k} sqrt(m! n!) / ((m-j)! (n-j)! j!)` for the single `j` with
/// `m + n - 2j = k`, or zero.
fn low_order_coefficient(m: usize, n: usize, k: usize) -> f64 {
    if k > m + n || (m + n - k) % 2 != 0 {
        return 0.0;
    }
    let j = (m + n - k) / 2;
    if j > m.min(n) {
        return 0.0;
    }
    let ln = -(k as f64) * std::f64::consts::LN_2 + 0.5 * (ln_factorial(m) + ln_factorial(n))
        - ln_factorial(m - j)
        - ln_factorial(n - j)
        - ln_factorial(j);
    ln.exp()
}

fn hermite_table(fam: &HermiteFamily, max_n: usize, bits: usize) -> Vec<Big> {
    let t = with_precision(&big_from_f64(fam.t), bits);
    let s = with_precision(&big_from_f64(fam.s), bits);
    let two_ts = (&t * &s) * 2u8;
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(with_precision(&Big::ONE, bits));
    if max_n >= 1 {
        out.push(two_ts.clone());
    }
    for k in 1..max_n {
        let next = &two_ts * &out[k] - (&s * &out[k - 1]) * (2 * k as u64);
        out.push(next);
    }
    out
}
