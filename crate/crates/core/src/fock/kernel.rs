//! Reproducing kernel of the Fock space with the Gaussian weight attached.

use std::f64::consts::PI;

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint {
    pub z: Complex64,
    pub w: Complex64,
}

impl KernelPoint {
    pub fn new(z: Complex64, w: Complex64) -> Self {
        Self { z, w }
    }
}

/// Symplectic form `a ∧ b = a₁ b₂ − b₁ a₂`.
pub fn wedge(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - b.re * a.im
}

/// `P(z, w) = (1/π) exp(−(|z|² + |w|²)/2 + z w̄)`.
pub fn kernel_eval(point: KernelPoint) -> Complex64 {
    let KernelPoint { z, w } = point;
    let exponent = -(z.norm_sqr() + w.norm_sqr()) / 2.0 + z * w.conj();
    exponent.exp() / PI
}

/// The same kernel written as `(1/π) e^{−|z−w|²/2} e^{i w∧z}`.
pub fn kernel_eval_magnetic(point: KernelPoint) -> Complex64 {
    let KernelPoint { z, w } = point;
    let modulus = (-(z - w).norm_sqr() / 2.0).exp() / PI;
    Complex64::from_polar(modulus, wedge(w, z))
}

/// Phase `U_t(u) = e^{i u∧t}` relating translated kernels:
/// `P(u−t, v−t) = U_t(u) P(u, v) U_t(v)⁻¹`.
pub fn translation_phase(t: Complex64, u: Complex64) -> Complex64 {
    Complex64::from_polar(1.0, wedge(u, t))
}
