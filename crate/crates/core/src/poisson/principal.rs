use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::calculus::{integrate_unit_disc, integrate_unit_square, poisson_bracket, ExactValue};
use super::gaussian::GaussianRational;
use super::polynomial::{QPolynomial2, UniPolynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// `[0, 1]²`
    UnitSquare,
    /// `{x² + y² < 1}`
    UnitDisc,
}

impl Region {
    pub fn name(self) -> &'static str {
        match self {
            Region::UnitSquare => "square",
            Region::UnitDisc => "disc",
        }
    }

    pub fn integrate(self, p: &QPolynomial2) -> ExactValue {
        match self {
            Region::UnitSquare => integrate_unit_square(p).into(),
            Region::UnitDisc => integrate_unit_disc(p),
        }
    }
}

/// `multiplier · χ_region`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrincipalFunction {
    pub multiplier: i64,
    pub region: Region,
}

impl PrincipalFunction {
    pub fn new(multiplier: i64, region: Region) -> Self {
        Self { multiplier, region }
    }
}

/// Predicted `Tr[p(A,B), q(A,B)] = (i/2π) · n · ∫_region {p, q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChhpPrediction {
    pub principal: PrincipalFunction,
    /// `∫_region {p, q}`
    pub bracket_integral: ExactValue,
}

impl ChhpPrediction {
    /// `2πi · trace = −n ∫ {p, q}`.
    pub fn two_pi_i_trace(&self) -> ExactValue {
        self.bracket_integral
            .scale(&GaussianRational::from(-self.principal.multiplier))
    }

    /// The trace as `over_pi / π + rational`: returns `(over_pi, rational)`.
    pub fn trace_parts(&self) -> (GaussianRational, GaussianRational) {
        let half_in = GaussianRational::new(
            BigRational::zero(),
            BigRational::new(self.principal.multiplier.into(), 2.into()),
        );
        (
            &self.bracket_integral.rational_part * &half_in,
            &self.bracket_integral.pi_part * &half_in,
        )
    }

    /// The trace when it is a plain Gaussian rational (π cancelled).
    pub fn exact_trace(&self) -> Option<GaussianRational> {
        let (over_pi, rational) = self.trace_parts();
        over_pi.is_zero().then_some(rational)
    }
}

impl fmt::Display for ChhpPrediction {
    /// E.g. `(-i)/(2pi)` or `-1/2i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (over_pi, rational) = self.trace_parts();
        let doubled = &over_pi * &GaussianRational::from(2);
        match (over_pi.is_zero(), rational.is_zero()) {
            (true, _) => write!(f, "{rational}"),
            (false, true) => write!(f, "({doubled})/(2pi)"),
            (false, false) => write!(f, "({doubled})/(2pi) + {rational}"),
        }
    }
}

/// `Tr[p(A,B), q(A,B)]` for a pair whose principal function is `g`.
pub fn chhp_prediction(g: &PrincipalFunction, p: &QPolynomial2, q: &QPolynomial2) -> ChhpPrediction {
    ChhpPrediction {
        principal: *g,
        bracket_integral: g.region.integrate(&poisson_bracket(p, q)),
    }
}

/// Value of the principal function at `z`; points on the region boundary are
/// in the essential spectrum and rejected.
pub fn index_at(g: &PrincipalFunction, z: &GaussianRational) -> Result<i64> {
    let (x, y) = (&z.re, &z.im);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let (inside, boundary) = match g.region {
        Region::UnitSquare => {
            let inside = *x > zero && *x < one && *y > zero && *y < one;
            let closed = *x >= zero && *x <= one && *y >= zero && *y <= one;
            (inside, closed && !inside)
        }
        Region::UnitDisc => {
            let r2 = z.norm_sqr();
            (r2 < one, r2 == one)
        }
    };
    if boundary {
        return Err(Error::BoundaryPoint(z.to_string()));
    }
    Ok(if inside { g.multiplier } else { 0 })
}

/// Whether `{r1∘s, r2∘s}` expands to the zero polynomial.
pub fn collapsing_check(r1: &UniPolynomial, r2: &UniPolynomial, s: &QPolynomial2) -> bool {
    poisson_bracket(&r1.compose(s), &r2.compose(s)).is_zero()
}
