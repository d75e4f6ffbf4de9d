//! Switch functions and their Gaussian-smoothed profiles.
//!
//! A switch function is a non-decreasing map `R -> [0, 1]` that vanishes left
//! of an interval `[c, d]` and equals one to its right. Matrix elements of a
//! switch function in the Fock basis only see the profile through its heat
//! smoothing `(1/sqrt(pi)) ∫ Λ(x) e^{-(x-u)^2} dx`, which has closed forms for
//! every kind implemented here.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{self, half_erfc_complement};

/// The erf ramp is clamped to exactly 0 / 1 this many widths away from its
/// center; `erfc(6)` is below half an ulp of 1.
pub const ERF_RAMP_HALF_SPAN: f64 = 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SwitchKind {
    Heaviside { a: f64 },
    LinearRamp { c: f64, d: f64 },
    ErfRamp { center: f64, width: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SwitchFunction {
    kind: SwitchKind,
}

impl SwitchFunction {
    pub fn heaviside(a: f64) -> Result<Self> {
        finite("a", a)?;
        Ok(Self {
            kind: SwitchKind::Heaviside { a },
        })
    }

    pub fn linear_ramp(c: f64, d: f64) -> Result<Self> {
        finite("c", c)?;
        finite("d", d)?;
        if c >= d {
            return Err(Error::InvalidParameter(format!(
                "linear ramp needs c < d, got c={c}, d={d}"
            )));
        }
        Ok(Self {
            kind: SwitchKind::LinearRamp { c, d },
        })
    }

    pub fn erf_ramp(center: f64, width: f64) -> Result<Self> {
        finite("center", center)?;
        finite("width", width)?;
        if width <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "erf ramp width must be positive, got {width}"
            )));
        }
        Ok(Self {
            kind: SwitchKind::ErfRamp { center, width },
        })
    }

    pub fn from_kind(kind: SwitchKind) -> Result<Self> {
        match kind {
            SwitchKind::Heaviside { a } => Self::heaviside(a),
            SwitchKind::LinearRamp { c, d } => Self::linear_ramp(c, d),
            SwitchKind::ErfRamp { center, width } => Self::erf_ramp(center, width),
        }
    }

    pub fn kind(&self) -> SwitchKind {
        self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            SwitchKind::Heaviside { .. } => "heaviside",
            SwitchKind::LinearRamp { .. } => "linear_ramp",
            SwitchKind::ErfRamp { .. } => "erf_ramp",
        }
    }

    /// Short description used in report headers, e.g. `linear_ramp(-1,1)`.
    pub fn label(&self) -> String {
        match self.kind {
            SwitchKind::Heaviside { a } => format!("heaviside({a})"),
            SwitchKind::LinearRamp { c, d } => format!("linear_ramp({c},{d})"),
            SwitchKind::ErfRamp { center, width } => format!("erf_ramp({center},{width})"),
        }
    }

    /// The interval `[c, d]` outside of which the profile is exactly 0 or 1.
    pub fn interpolation_interval(&self) -> (f64, f64) {
        match self.kind {
            SwitchKind::Heaviside { a } => (a, a),
            SwitchKind::LinearRamp { c, d } => (c, d),
            SwitchKind::ErfRamp { center, width } => (
                center - ERF_RAMP_HALF_SPAN * width,
                center + ERF_RAMP_HALF_SPAN * width,
            ),
        }
    }

    /// Points where the profile is not smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self.kind {
            SwitchKind::Heaviside { a } => vec![a],
            SwitchKind::LinearRamp { c, d } => vec![c, d],
            SwitchKind::ErfRamp { .. } => {
                let (c, d) = self.interpolation_interval();
                vec![c, d]
            }
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (c, d) = self.interpolation_interval();
        if x < c {
            return 0.0;
        }
        if x > d {
            return 1.0;
        }
        match self.kind {
            // value at the jump itself is immaterial for every integral
            SwitchKind::Heaviside { .. } => 0.5,
            SwitchKind::LinearRamp { c, d } => (x - c) / (d - c),
            SwitchKind::ErfRamp { center, width } => half_erfc_complement((x - center) / width),
        }
    }

    /// The profile `x -> Λ(x * factor)`.
    pub fn compose_scale(&self, factor: f64) -> Result<Self> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "scale factor must be positive, got {factor}"
            )));
        }
        match self.kind {
            SwitchKind::Heaviside { a } => Self::heaviside(a / factor),
            SwitchKind::LinearRamp { c, d } => Self::linear_ramp(c / factor, d / factor),
            SwitchKind::ErfRamp { center, width } => Self::erf_ramp(center / factor, width / factor),
        }
    }

    pub fn smoothed(&self) -> SmoothedProfile {
        SmoothedProfile { profile: *self }
    }
}

fn finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be finite, got {v}")))
    }
}

/// Gaussian smoothing of a switch profile, `u -> (1/sqrt(pi)) ∫ Λ(x) e^{-(x-u)^2} dx`.
pub fn smooth_symbol(profile: &SwitchFunction) -> SmoothedProfile {
    profile.smoothed()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothedProfile {
    profile: SwitchFunction,
}

/// One Gaussian-times-Hermite family in the Taylor coefficients of a smoothed
/// profile: for `k >= start`,
/// `Λ̃^{(k)}(u) = prefactor * G_{k-start}`, with `G_0 = 1`, `G_1 = 2 t s` and
/// `G_{n+1} = 2 t s G_n - 2 n s G_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteFamily {
    pub prefactor: f64,
    pub start: usize,
    pub t: f64,
    pub s: f64,
}

impl HermiteFamily {
    /// `G_n` in double precision; the series engine recomputes these in
    /// extended precision.
    pub fn g(&self, n: usize) -> f64 {
        let mut prev = 1.0;
        if n == 0 {
            return prev;
        }
        let mut cur = 2.0 * self.t * self.s;
        for k in 1..n {
            let next = 2.0 * self.t * self.s * cur - 2.0 * k as f64 * self.s * prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// Taylor data of `Λ̃` at a point: the value, explicitly known low-order
/// derivatives, and Hermite families covering all remaining orders.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorData {
    pub value: f64,
    /// `(k, Λ̃^{(k)}(u))` for orders not covered by any family.
    pub low_orders: Vec<(usize, f64)>,
    pub families: Vec<HermiteFamily>,
}

impl TaylorData {
    pub fn derivative(&self, k: usize) -> f64 {
        if k == 0 {
            return self.value;
        }
        let low: f64 = self
            .low_orders
            .iter()
            .filter(|(order, _)| *order == k)
            .map(|(_, v)| v)
            .sum();
        let fam: f64 = self
            .families
            .iter()
            .filter(|f| k >= f.start)
            .map(|f| f.prefactor * f.g(k - f.start))
            .sum();
        low + fam
    }
}

impl SmoothedProfile {
    pub fn profile(&self) -> &SwitchFunction {
        &self.profile
    }

    pub fn eval(&self, u: f64) -> f64 {
        match self.profile.kind {
            SwitchKind::Heaviside { a } => half_erfc_complement(u - a),
            SwitchKind::LinearRamp { c, d } => (ramp_moment(u - c) - ramp_moment(u - d)) / (d - c),
            SwitchKind::ErfRamp { center, width } => {
                half_erfc_complement((u - center) / (width * width + 1.0).sqrt())
            }
        }
    }

    pub fn taylor_at(&self, u: f64) -> TaylorData {
        let inv_sqrt_pi = 1.0 / PI.sqrt();
        let value = self.eval(u);
        match self.profile.kind {
            SwitchKind::Heaviside { a } => {
                let t = a - u;
                TaylorData {
                    value,
                    low_orders: vec![],
                    families: vec![HermiteFamily {
                        prefactor: (-t * t).exp() * inv_sqrt_pi,
                        start: 1,
                        t,
                        s: 1.0,
                    }],
                }
            }
            SwitchKind::LinearRamp { c, d } => {
                let (tc, td) = (c - u, d - u);
                let scale = inv_sqrt_pi / (d - c);
                TaylorData {
                    value,
                    low_orders: vec![(1, (special::erf(td) - special::erf(tc)) / (2.0 * (d - c)))],
                    families: vec![
                        HermiteFamily {
                            prefactor: -(-td * td).exp() * scale,
                            start: 2,
                            t: td,
                            s: 1.0,
                        },
                        HermiteFamily {
                            prefactor: (-tc * tc).exp() * scale,
                            start: 2,
                            t: tc,
                            s: 1.0,
                        },
                    ],
                }
            }
            SwitchKind::ErfRamp { center, width } => {
                let s = 1.0 / (width * width + 1.0);
                let t = center - u;
                TaylorData {
                    value,
                    low_orders: vec![],
                    families: vec![HermiteFamily {
                        prefactor: (-t * t * s).exp() * s.sqrt() * inv_sqrt_pi,
                        start: 1,
                        t,
                        s,
                    }],
                }
            }
        }
    }

    /// `Λ̃^{(k)}(u)` in double precision.
    pub fn derivative(&self, k: usize, u: f64) -> f64 {
        self.taylor_at(u).derivative(k)
    }
}

/// `E[max(μ + ξ, 0)]` for `ξ ~ N(0, 1/2)`.
fn ramp_moment(mu: f64) -> f64 {
    mu * half_erfc_complement(mu) + (-mu * mu).exp() / (2.0 * PI.sqrt())
}

/// Numerically integrates `x -> Λ(x + a) - Λ(x)` over a range covering both
/// interpolation intervals. The exact value is `a` for every switch function.
pub fn switch_integral_check(profile: &SwitchFunction, a: f64) -> Result<f64> {
    finite("a", a)?;
    if a == 0.0 {
        return Ok(0.0);
    }
    let (c, d) = profile.interpolation_interval();
    let lo = c.min(c - a) - 1.0;
    let hi = d.max(d - a) + 1.0;
    let mut breaks = profile.breakpoints();
    breaks.extend(profile.breakpoints().into_iter().map(|b| b - a));
    let width = match profile.kind {
        SwitchKind::ErfRamp { width, .. } => (0.5 * width).min(1.0),
        _ => 1.0,
    };
    Ok(special::integrate(lo, hi, &breaks, width, |x| {
        profile.eval(x + a) - profile.eval(x)
    }))
}
