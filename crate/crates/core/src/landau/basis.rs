//! Orthonormal bases of the lowest two Landau levels at `b = 2`.
//!
//! Level 0: `φ_m = zᵐ e^{−|z|²/2} / sqrt(π m!)`, `m ≥ 0`.
//! Level 1: `ψ_m ∝ ((m+1) zᵐ − z̄ z^{m+1}) e^{−|z|²/2}`, `m ≥ −1`; for `m = −1`
//! this is `−z̄ e^{−|z|²/2}`.
//!
//! Both are `r^m e^{imθ} p(r²) e^{−r²/2}` with a short polynomial `p`, and the
//! norms come from `∫ t^m p(t)² e^{−t} dt` expanded into Gamma values.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::BasisMember;
use crate::special::ln_gamma;

pub const MAX_LEVEL: usize = 1;

/// Members of one Landau level, indexed by angular-momentum label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LandauBasis {
    level: usize,
}

impl LandauBasis {
    pub fn new(level: usize) -> Result<Self> {
        if level > MAX_LEVEL {
            return Err(Error::UnsupportedLevel(level));
        }
        Ok(Self { level })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn min_label(&self) -> i64 {
        -(self.level as i64)
    }

    /// The first `count` members.
    pub fn members(&self, count: usize) -> Vec<BasisMember> {
        (0..count as i64)
            .map(|k| BasisMember {
                level: self.level,
                label: self.min_label() + k,
            })
            .collect()
    }

    pub fn check_label(&self, label: i64) -> Result<()> {
        if label < self.min_label() {
            return Err(Error::IndexOutOfRange {
                index: label,
                min: self.min_label(),
            });
        }
        Ok(())
    }

    /// Coefficients of `p(t)` in `r^m p(r²)`.
    fn radial_polynomial(&self, label: i64) -> Vec<f64> {
        match self.level {
            0 => vec![1.0],
            _ => vec![(label + 1) as f64, -1.0],
        }
    }

    /// `ln ‖r^m e^{imθ} p(r²) e^{−r²/2}‖²`.
    pub fn ln_norm_sq(&self, label: i64) -> f64 {
        let c = self.radial_polynomial(label);
        let first = c.iter().position(|v| *v != 0.0).expect("nonzero radial polynomial");
        // π Σ c_i c_j Γ(m+1+i+j), factored by Γ(m+1+2·first)
        let base = (label + 1) as f64 + 2.0 * first as f64;
        let mut bracket = 0.0;
        for (i, ci) in c.iter().enumerate().skip(first) {
            for (j, cj) in c.iter().enumerate().skip(first) {
                let extra = i + j - 2 * first;
                let rising: f64 = (0..extra).map(|k| base + k as f64).product();
                bracket += ci * cj * rising;
            }
        }
        PI.ln() + ln_gamma(base) + bracket.ln()
    }

    /// Normalized basis function at `z`.
    pub fn value(&self, label: i64, z: Complex64) -> Complex64 {
        let r2 = z.norm_sqr();
        let p: f64 = self
            .radial_polynomial(label)
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r2 + c);
        if p == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if r2 == 0.0 {
            return match label {
                0 => Complex64::new(p * (-0.5 * self.ln_norm_sq(0)).exp(), 0.0),
                _ => Complex64::new(0.0, 0.0),
            };
        }
        let ln_mag = label as f64 * 0.5 * r2.ln() - 0.5 * r2 + p.abs().ln() - 0.5 * self.ln_norm_sq(label);
        let theta = label as f64 * z.arg();
        Complex64::from_polar(ln_mag.exp() * p.signum(), theta)
    }
}

/// Normalized basis function of any supported level.
pub fn basis_value(member: BasisMember, z: Complex64) -> Complex64 {
    LandauBasis::new(member.level)
        .expect("basis member of a supported level")
        .value(member.label, z)
}
