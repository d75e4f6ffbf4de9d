//! The compression `P (z/|z|) P` to the lowest Landau level, which acts as a
//! weighted unilateral shift `φ_n -> c_n φ_{n+1}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{ln_factorial, ln_gamma};

/// `c_n = Γ(n + 3/2) / sqrt(n! (n+1)!)` for `n < count`.
pub fn shift_weights(count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::InvalidParameter("need at least one weight".into()));
    }
    Ok((0..count)
        .map(|n| {
            (ln_gamma(n as f64 + 1.5) - 0.5 * (ln_factorial(n) + ln_factorial(n + 1))).exp()
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftIndex {
    pub kernel_dim: usize,
    pub cokernel_dim: usize,
    pub index: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedShift {
    weights: Vec<f64>,
}

impl WeightedShift {
    pub fn lowest_level(count: usize) -> Result<Self> {
        Ok(Self {
            weights: shift_weights(count)?,
        })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Image of the coefficient vector `x` (in the `φ_n` basis).
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; x.len() + 1];
        for (n, (xn, cn)) in x.iter().zip(&self.weights).enumerate() {
            out[n + 1] = cn * xn;
        }
        out
    }

    /// Kernel is spanned by the `φ_n` with vanishing weight; the range misses
    /// `φ_0` and every `φ_{n+1}` with vanishing weight.
    pub fn fredholm_index(&self) -> ShiftIndex {
        let zeros = self.weights.iter().filter(|c| **c == 0.0).count();
        let kernel_dim = zeros;
        let cokernel_dim = zeros + 1;
        ShiftIndex {
            kernel_dim,
            cokernel_dim,
            index: kernel_dim as i64 - cokernel_dim as i64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::integrate;

    #[test]
    fn weights_match_radial_quadrature() {
        let w = shift_weights(30).unwrap();
        for (n, cn) in w.iter().enumerate() {
            let ln_norm = 0.5 * (ln_factorial(n) + ln_factorial(n + 1));
            let peak = ((n + 1) as f64).sqrt();
            let hi = peak + 12.0;
            let q = integrate(0.0, hi, &[peak], 0.5, |r| {
                if r == 0.0 {
                    0.0
                } else {
                    2.0 * ((2 * n + 2) as f64 * r.ln() - r * r - ln_norm).exp()
                }
            });
            assert!((q - cn).abs() < 1e-12, "n={n}: {q} vs {cn}");
        }
    }

    #[test]
    fn first_weight_and_limit() {
        let w = shift_weights(2000).unwrap();
        assert!((w[0] - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-15);
        assert!(w.iter().all(|c| *c > 0.0 && *c < 1.0));
        assert!((1.0 - w[1999]).abs() < 1e-4);
    }

    #[test]
    fn index_is_minus_one() {
        let s = WeightedShift::lowest_level(64).unwrap();
        assert_eq!(
            s.fredholm_index(),
            ShiftIndex {
                kernel_dim: 0,
                cokernel_dim: 1,
                index: -1
            }
        );
        assert_eq!(s.apply(&[1.0, 0.0])[0], 0.0);
    }
}
