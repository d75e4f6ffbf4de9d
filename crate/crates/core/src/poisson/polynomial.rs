use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;

/// Exponents `(a, b)` of the monomial `x^a y^b`.
pub type Exponents = (u32, u32);

/// Polynomial in two real variables `x, y` with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial2 {
    terms: BTreeMap<Exponents, GaussianRational>,
}

impl QPolynomial2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, GaussianRational::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, GaussianRational::one())
    }

    pub fn monomial(a: u32, b: u32, c: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term((a, b), &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, GaussianRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Adds `c x^a y^b`, dropping the term if it cancels.
    pub fn add_term(&mut self, e: Exponents, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: u32, b: u32) -> GaussianRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// All coefficients real.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((a, _), _)| *a > 0)
                .map(|((a, b), c)| ((a - 1, *b), c * &GaussianRational::from(*a as i64))),
        )
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((_, b), _)| *b > 0)
                .map(|((a, b), c)| ((*a, b - 1), c * &GaussianRational::from(*b as i64))),
        )
    }
}

impl Add<&QPolynomial2> for &QPolynomial2 {
    type Output = QPolynomial2;
    fn add(self, rhs: &QPolynomial2) -> QPolynomial2 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&QPolynomial2> for &QPolynomial2 {
    type Output = QPolynomial2;
    fn sub(self, rhs: &QPolynomial2) -> QPolynomial2 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul<&QPolynomial2> for &QPolynomial2 {
    type Output = QPolynomial2;
    fn mul(self, rhs: &QPolynomial2) -> QPolynomial2 {
        let mut out = QPolynomial2::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &QPolynomial2 {
    type Output = QPolynomial2;
    fn neg(self) -> QPolynomial2 {
        self.scale(&-GaussianRational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QPolynomial2 {
            type Output = QPolynomial2;
            fn $m(self, rhs: QPolynomial2) -> QPolynomial2 {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QPolynomial2 {
    type Output = QPolynomial2;
    fn neg(self) -> QPolynomial2 {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, name: char, e: u32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for QPolynomial2 {
    /// Parser-compatible form, e.g. `(1/2+i)*x^2*y - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            let (negated, mag) = if c.is_real() && c.re < BigRational::zero() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (k == 0, negated) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            let mut first = true;
            let bare = *a == 0 && *b == 0;
            if !mag.is_one() || bare {
                if mag.is_real() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
                first = false;
            }
            write_monomial(f, 'x', *a, &mut first)?;
            write_monomial(f, 'y', *b, &mut first)?;
        }
        Ok(())
    }
}

/// Polynomial in one variable `t`, coefficients indexed by power.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPolynomial {
    coefficients: Vec<GaussianRational>,
}

impl UniPolynomial {
    pub fn new(mut coefficients: Vec<GaussianRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[GaussianRational] {
        &self.coefficients
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// `r(s(x, y))`, expanded exactly by Horner's scheme.
    pub fn compose(&self, s: &QPolynomial2) -> QPolynomial2 {
        let mut out = QPolynomial2::zero();
        for c in self.coefficients.iter().rev() {
            out = &out * s;
            out.add_term((0, 0), c);
        }
        out
    }
}
