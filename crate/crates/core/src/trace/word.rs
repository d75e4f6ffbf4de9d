use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poisson::{GaussianRational, QPolynomial2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
}

/// A non-empty product of the two operators, leftmost letter first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OperatorWord {
    letters: Vec<Letter>,
}

impl OperatorWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidParameter("operator words must be non-empty".into()));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    /// `wⁿ`.
    pub fn repeat(&self, n: usize) -> Result<Self> {
        Self::new(self.letters.repeat(n))
    }

    /// Moves the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        let shift = k % letters.len();
        letters.rotate_left(shift);
        Self { letters }
    }

    /// The lexicographically smallest rotation; equal for all words that
    /// differ by a cyclic permutation.
    pub fn canonical_rotation(&self) -> Self {
        (1..self.len())
            .map(|k| self.rotate(k))
            .fold(self.clone(), |best, w| if w.letters < best.letters { w } else { best })
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| match c {
                'A' | 'a' => Ok(Letter::A),
                'B' | 'b' => Ok(Letter::B),
                _ => Err(Error::parse(i, format!("unknown letter '{c}' (expected A or B)"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", if *l == Letter::A { 'A' } else { 'B' })?;
        }
        Ok(())
    }
}

/// Linear combination of words.
pub type WeightedWords = Vec<(Complex64, OperatorWord)>;

/// How the monomial `x^a y^b` becomes an operator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ordering {
    /// `A^a B^b`
    LeftNormal,
    /// `B^b A^a`
    RightNormal,
}

impl Ordering {
    pub fn name(self) -> &'static str {
        match self {
            Ordering::LeftNormal => "left_normal",
            Ordering::RightNormal => "right_normal",
        }
    }
}

impl FromStr for Ordering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left_normal" => Ok(Ordering::LeftNormal),
            "right_normal" => Ok(Ordering::RightNormal),
            other => Err(Error::UnsupportedOrdering(other.to_string())),
        }
    }
}

/// Nearest double-precision value of an exact coefficient.
pub fn to_complex(c: &GaussianRational) -> Complex64 {
    Complex64::new(
        c.re.to_f64().unwrap_or(f64::NAN),
        c.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// Words of `p(A, B)` under `ordering`. The constant term is returned
/// separately since it is a multiple of the identity.
pub fn expand_polynomial(p: &QPolynomial2, ordering: Ordering) -> (Complex64, WeightedWords) {
    let mut constant = Complex64::new(0.0, 0.0);
    let mut words = Vec::new();
    for ((a, b), c) in p.terms() {
        let weight = to_complex(c);
        if *a == 0 && *b == 0 {
            constant = weight;
            continue;
        }
        let xs = std::iter::repeat(Letter::A).take(*a as usize);
        let ys = std::iter::repeat(Letter::B).take(*b as usize);
        let letters: Vec<Letter> = match ordering {
            Ordering::LeftNormal => xs.chain(ys).collect(),
            Ordering::RightNormal => ys.chain(xs).collect(),
        };
        words.push((weight, OperatorWord { letters }));
    }
    (constant, words)
}

/// Terms of `[p(A,B), q(A,B)] = Σ c_i d_j (u_i v_j − v_j u_i)`; identity
/// parts commute with everything and drop out.
pub fn commutator_words(p: &QPolynomial2, q: &QPolynomial2, ordering: Ordering) -> WeightedWords {
    let (_, pw) = expand_polynomial(p, ordering);
    let (_, qw) = expand_polynomial(q, ordering);
    let mut out = Vec::with_capacity(2 * pw.len() * qw.len());
    for (c, u) in &pw {
        for (d, v) in &qw {
            out.push((c * d, u.concat(v)));
            out.push((-(c * d), v.concat(u)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::parse_polynomial;

    #[test]
    fn canonical_rotation_identifies_cycles() {
        let w: OperatorWord = "BABAA".parse().unwrap();
        let canon = w.canonical_rotation();
        assert_eq!(canon.to_string(), "AABAB");
        for k in 0..w.len() {
            assert_eq!(w.rotate(k).canonical_rotation(), canon);
        }
        let other: OperatorWord = "AABBA".parse().unwrap();
        assert_ne!(other.canonical_rotation(), canon);
    }

    #[test]
    fn word_parsing() {
        let w: OperatorWord = "ABAB".parse().unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.rotate(1).to_string(), "BABA");
        assert!("".parse::<OperatorWord>().is_err());
        assert!(matches!("ABC".parse::<OperatorWord>(), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn orderings() {
        let p = parse_polynomial("x^3*y^2 - 2").unwrap();
        let (c, left) = expand_polynomial(&p, Ordering::LeftNormal);
        assert_eq!(c, Complex64::new(-2.0, 0.0));
        assert_eq!(left[0].1.to_string(), "AAABB");
        let (_, right) = expand_polynomial(&p, Ordering::RightNormal);
        assert_eq!(right[0].1.to_string(), "BBAAA");
        assert_eq!("middle".parse::<Ordering>().unwrap_err(), Error::UnsupportedOrdering("middle".into()));
    }

    #[test]
    fn commutator_expansion() {
        let p = parse_polynomial("x + 1").unwrap();
        let q = parse_polynomial("y").unwrap();
        let terms = commutator_words(&p, &q, Ordering::LeftNormal);
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].1.to_string(), "AB");
        assert_eq!(terms[1], (Complex64::new(-1.0, 0.0), "BA".parse().unwrap()));
    }
}
