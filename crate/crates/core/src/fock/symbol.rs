use serde::{Deserialize, Serialize};

use super::switch::SwitchFunction;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    /// `u -> Λ(u₁)`
    First,
    /// `u -> Λ(u₂)`
    Second,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::First => "first",
            Axis::Second => "second",
        }
    }
}

/// A switch function of one planar coordinate, at magnetic field strength `b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarSymbol {
    pub profile: SwitchFunction,
    pub axis: Axis,
    field_strength: f64,
}

pub const DEFAULT_FIELD_STRENGTH: f64 = 2.0;

impl PlanarSymbol {
    pub fn new(profile: SwitchFunction, axis: Axis) -> Self {
        Self {
            profile,
            axis,
            field_strength: DEFAULT_FIELD_STRENGTH,
        }
    }

    pub fn with_field_strength(mut self, b: f64) -> Result<Self> {
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "field strength must be positive, got {b}"
            )));
        }
        self.field_strength = b;
        Ok(self)
    }

    pub fn field_strength(&self) -> f64 {
        self.field_strength
    }

    /// Profile whose `b = 2` matrix equals this symbol's matrix at field
    /// strength `b`: rescaling `z -> sqrt(2/b) w` maps the weight
    /// `e^{-b|z|²/4}` to `e^{-|w|²/2}`, so the profile becomes `Λ(x sqrt(2/b))`.
    pub fn effective_profile(&self) -> SwitchFunction {
        if self.field_strength == DEFAULT_FIELD_STRENGTH {
            return self.profile;
        }
        self.profile
            .compose_scale((2.0 / self.field_strength).sqrt())
            .expect("field strength validated on construction")
    }
}
