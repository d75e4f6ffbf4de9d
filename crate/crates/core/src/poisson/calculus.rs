use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::gaussian::GaussianRational;
use super::polynomial::QPolynomial2;

/// `{p, q} = ∂p/∂x ∂q/∂y − ∂p/∂y ∂q/∂x`.
pub fn poisson_bracket(p: &QPolynomial2, q: &QPolynomial2) -> QPolynomial2 {
    &(&p.derivative_x() * &q.derivative_y()) - &(&p.derivative_y() * &q.derivative_x())
}

/// `rational_part + pi_part·π`, exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactValue {
    pub rational_part: GaussianRational,
    pub pi_part: GaussianRational,
}

impl ExactValue {
    pub fn rational(r: GaussianRational) -> Self {
        Self {
            rational_part: r,
            pi_part: GaussianRational::zero(),
        }
    }

    pub fn pi_multiple(p: GaussianRational) -> Self {
        Self {
            rational_part: GaussianRational::zero(),
            pi_part: p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.pi_part.is_zero()
    }

    pub fn has_pi(&self) -> bool {
        !self.pi_part.is_zero()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            rational_part: &self.rational_part * c,
            pi_part: &self.pi_part * c,
        }
    }
}

impl From<GaussianRational> for ExactValue {
    fn from(r: GaussianRational) -> Self {
        Self::rational(r)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational_part.is_zero(), self.pi_part.is_zero()) {
            (_, true) => write!(f, "{}", self.rational_part),
            (true, false) => write!(f, "({})*pi", self.pi_part),
            (false, false) => write!(f, "{} + ({})*pi", self.rational_part, self.pi_part),
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExactValue", 2)?;
        st.serialize_field("rational_part", &self.rational_part.to_string())?;
        st.serialize_field("pi_part", &self.pi_part.to_string())?;
        st.end()
    }
}

/// `∫_{[0,1]²} p`. The unit square never produces a `π`, which the return
/// type records.
pub fn integrate_unit_square(p: &QPolynomial2) -> GaussianRational {
    let mut total = GaussianRational::zero();
    for ((a, b), c) in p.terms() {
        let denom = BigInt::from(*a as u64 + 1) * BigInt::from(*b as u64 + 1);
        total += &c.scale(&BigRational::new(BigInt::one(), denom));
    }
    total
}

fn double_factorial_odd(n: i64) -> BigInt {
    // (n)!! for odd n >= -1
    let mut out = BigInt::one();
    let mut k = n;
    while k > 1 {
        out *= k;
        k -= 2;
    }
    out
}

fn double_factorial_even(n: u64) -> BigInt {
    let mut out = BigInt::one();
    let mut k = n;
    while k > 1 {
        out *= k;
        k -= 2;
    }
    out
}

/// `∫_{x²+y²<1} p`: `∫ x^a y^b = 2π (a−1)!! (b−1)!! / (a+b+2)!!` when `a`
/// and `b` are both even, zero otherwise.
pub fn integrate_unit_disc(p: &QPolynomial2) -> ExactValue {
    let mut total = GaussianRational::zero();
    for ((a, b), c) in p.terms() {
        if a % 2 != 0 || b % 2 != 0 {
            continue;
        }
        let numer = BigInt::from(2)
            * double_factorial_odd(*a as i64 - 1)
            * double_factorial_odd(*b as i64 - 1);
        let denom = double_factorial_even(*a as u64 + *b as u64 + 2);
        total += &c.scale(&BigRational::new(numer, denom));
    }
    ExactValue::pi_multiple(total)
}
