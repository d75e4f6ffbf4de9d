use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Extrapolation {
    pub value: Complex64,
    /// Size of the correction applied to the last sample.
    pub error_estimate: f64,
    /// Fitted decay rate `λ` in `error ∝ e^{−λM}`, when one was fitted.
    pub rate: Option<f64>,
}

/// Limit of samples `x_M` assuming `x_M = L + C e^{−λM}` with real `λ > 0`,
/// fitted to the last three samples. With two samples, or when the
/// differences do not shrink geometrically, the last sample is returned with
/// the last difference as the error estimate.
pub fn richardson_extrapolate(samples: &[(usize, Complex64)]) -> Result<Extrapolation> {
    if samples.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: samples.len(),
        });
    }
    if samples.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err(Error::InvalidParameter("samples must be at strictly increasing M".into()));
    }
    let n = samples.len();
    let (m2, x2) = samples[n - 1];
    let (m1, x1) = samples[n - 2];
    let d2 = x2 - x1;
    let fallback = Extrapolation {
        value: x2,
        error_estimate: d2.norm(),
        rate: None,
    };
    if n < 3 || d2.norm() == 0.0 {
        return Ok(fallback);
    }
    let (m0, x0) = samples[n - 3];
    let d1 = x1 - x0;
    if d1.norm() == 0.0 {
        return Ok(fallback);
    }
    let ratio = d2.norm() / d1.norm();
    let (h1, h2) = ((m1 - m0) as f64, (m2 - m1) as f64);
    // |d2|/|d1| = (1 − e^{−λ h2}) / (e^{λ h1} − 1), decreasing from h2/h1 to 0
    let g = |lambda: f64| -(-lambda * h2).exp_m1() / (lambda * h1).exp_m1();
    if !(ratio < h2 / h1) {
        return Ok(fallback);
    }
    let (mut lo, mut hi) = (1e-12f64, 1.0f64);
    while g(hi) > ratio {
        hi *= 2.0;
        if hi > 1e6 {
            return Ok(fallback);
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > ratio {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lambda = 0.5 * (lo + hi);
    // x2 − L = C e^{−λ m2} = −d2 / (e^{λ h2} − 1)
    let correction = d2 / (lambda * h2).exp_m1();
    Ok(Extrapolation {
        value: x2 + correction,
        error_estimate: correction.norm(),
        rate: Some(lambda),
    })
}
