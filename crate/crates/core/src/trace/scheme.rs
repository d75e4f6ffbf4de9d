use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Operators truncated to `outer x outer`, diagonal summed over `m < window`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationScheme {
    outer: usize,
    window: usize,
    pub extrapolate: bool,
}

impl TruncationScheme {
    pub fn new(outer: usize, window: usize) -> Result<Self> {
        if window == 0 || window > outer {
            return Err(Error::InvalidWindow { window, size: outer });
        }
        Ok(Self {
            outer,
            window,
            extrapolate: false,
        })
    }

    /// Window `M/2`.
    pub fn half_window(outer: usize) -> Result<Self> {
        Self::new(outer, outer / 2)
    }

    /// Window equal to the full truncation: every commutator trace vanishes.
    pub fn full_window(outer: usize) -> Result<Self> {
        Self::new(outer, outer)
    }

    pub fn with_extrapolation(mut self, on: bool) -> Self {
        self.extrapolate = on;
        self
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn is_full_window(&self) -> bool {
        self.window == self.outer
    }

    /// The same window ratio at outer size `outer`.
    pub fn rescaled(&self, outer: usize) -> Result<Self> {
        let window = ((self.window as u128 * outer as u128) / self.outer as u128) as usize;
        Ok(Self::new(outer, window.max(1))?.with_extrapolation(self.extrapolate))
    }

    /// Outer sizes `M/4, M/2, M` used for extrapolation (those that stay
    /// at least 2).
    pub fn extrapolation_ladder(&self) -> Vec<usize> {
        [self.outer / 4, self.outer / 2, self.outer]
            .into_iter()
            .filter(|m| *m >= 2)
            .collect()
    }
}
