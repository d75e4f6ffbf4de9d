use ndarray::{s, Array2, ArrayView2};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::scheme::TruncationScheme;
use super::word::{commutator_words, Letter, OperatorWord, Ordering, WeightedWords};
use crate::error::{Error, Result};
use crate::fock::ToeplitzMatrix;
use crate::poisson::QPolynomial2;
use crate::special::pairwise_sum;

/// Partial diagonal sum of a truncated operator.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceReport {
    pub value: Complex64,
    pub outer: usize,
    pub window: usize,
    /// `|d_{N−1}| · N`
    pub tail_estimate: f64,
    /// Diagonal summands `d_m`, `m < N`.
    pub diagonal: Vec<Complex64>,
}

impl TraceReport {
    fn from_diagonal(diagonal: Vec<Complex64>, scheme: &TruncationScheme) -> Self {
        let n = diagonal.len();
        Self {
            value: pairwise_sum(&diagonal),
            outer: scheme.outer(),
            window: scheme.window(),
            tail_estimate: diagonal[n - 1].norm() * n as f64,
            diagonal,
        }
    }

    /// `2πi · value`.
    pub fn two_pi_i_value(&self) -> Complex64 {
        Complex64::new(0.0, 2.0 * std::f64::consts::PI) * self.value
    }

    /// Largest real part of a summand relative to the largest summand; zero
    /// for an anti-Hermitian operator.
    pub fn max_relative_real_part(&self) -> f64 {
        let scale = self.diagonal.iter().map(|d| d.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return 0.0;
        }
        self.diagonal.iter().map(|d| d.re.abs()).fold(0.0, f64::max) / scale
    }

    /// `|sum over m < N| − sum over m < N/2|`.
    pub fn half_window_change(&self) -> f64 {
        let half = pairwise_sum(&self.diagonal[..self.window / 2]);
        (self.value - half).norm()
    }
}

impl Serialize for TraceReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let diagonal: Vec<[f64; 2]> = self.diagonal.iter().map(|d| [d.re, d.im]).collect();
        let mut st = s.serialize_struct("TraceReport", 6)?;
        st.serialize_field("value_re", &self.value.re)?;
        st.serialize_field("value_im", &self.value.im)?;
        st.serialize_field("M", &self.outer)?;
        st.serialize_field("N", &self.window)?;
        st.serialize_field("tail_estimate", &self.tail_estimate)?;
        st.serialize_field("diagonal", &diagonal)?;
        st.end()
    }
}

fn operands<'a>(
    a: &'a ToeplitzMatrix,
    b: &'a ToeplitzMatrix,
    scheme: &TruncationScheme,
) -> Result<(ArrayView2<'a, Complex64>, ArrayView2<'a, Complex64>)> {
    if a.size() != b.size() {
        return Err(Error::DimensionMismatch(format!(
            "operands have sizes {} and {}",
            a.size(),
            b.size()
        )));
    }
    if scheme.outer() > a.size() {
        return Err(Error::DimensionMismatch(format!(
            "scheme needs M={} but the matrices are {}x{}",
            scheme.outer(),
            a.size(),
            a.size()
        )));
    }
    let m = scheme.outer();
    Ok((a.entries().slice_move(s![..m, ..m]), b.entries().slice_move(s![..m, ..m])))
}

/// `(w)_{mm}` for `m < window`. The first letter is restricted to the window
/// rows; the last contraction is a plain loop so that `AB` and `BA` of
/// Hermitian operands give exactly conjugate summands.
fn word_diagonal(
    word: &OperatorWord,
    a: ArrayView2<'_, Complex64>,
    b: ArrayView2<'_, Complex64>,
    window: usize,
) -> Vec<Complex64> {
    let pick = |l: Letter| if l == Letter::A { a } else { b };
    let letters = word.letters();
    if letters.len() == 1 {
        let x = pick(letters[0]);
        return (0..window).map(|m| x[[m, m]]).collect();
    }
    let mut rows: Array2<Complex64> = pick(letters[0]).slice(s![..window, ..]).to_owned();
    for l in &letters[1..letters.len() - 1] {
        rows = rows.dot(&pick(*l));
    }
    let last = pick(letters[letters.len() - 1]);
    let size = last.nrows();
    (0..window)
        .map(|m| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..size {
                acc += rows[[m, k]] * last[[k, m]];
            }
            acc
        })
        .collect()
}

/// Merges words equal up to rotation, keeping first-seen order.
fn merge_cyclic(terms: &[(Complex64, OperatorWord)]) -> WeightedWords {
    let mut merged: WeightedWords = Vec::new();
    for (c, w) in terms {
        let w = w.canonical_rotation();
        match merged.iter_mut().find(|(_, v)| *v == w) {
            Some((acc, _)) => *acc += c,
            None => merged.push((*c, w)),
        }
    }
    merged.retain(|(c, _)| *c != Complex64::new(0.0, 0.0));
    merged
}

/// Windowed trace of `Σ c_t w_t(A, B)`.
///
/// At `N = M` the trace of a finite matrix is cyclic, so the value is taken
/// over cyclically canonical words: a commutator then cancels exactly rather
/// than to rounding. The reported diagonal is always the literal one.
pub fn weighted_trace(
    terms: &[(Complex64, OperatorWord)],
    a: &ToeplitzMatrix,
    b: &ToeplitzMatrix,
    scheme: &TruncationScheme,
) -> Result<TraceReport> {
    let (av, bv) = operands(a, b, scheme)?;
    let window = scheme.window();
    let per_word: Vec<Vec<Complex64>> = terms
        .par_iter()
        .map(|(_, w)| word_diagonal(w, av, bv, window))
        .collect();
    let diagonal = combine(terms, &per_word, window);
    let mut report = TraceReport::from_diagonal(diagonal, scheme);
    if scheme.is_full_window() {
        let merged = merge_cyclic(terms);
        let per_word: Vec<Vec<Complex64>> = merged
            .par_iter()
            .map(|(_, w)| word_diagonal(w, av, bv, window))
            .collect();
        report.value = pairwise_sum(&combine(&merged, &per_word, window));
    }
    Ok(report)
}

fn combine(terms: &[(Complex64, OperatorWord)], per_word: &[Vec<Complex64>], window: usize) -> Vec<Complex64> {
    let mut diagonal = vec![Complex64::new(0.0, 0.0); window];
    for ((c, _), d) in terms.iter().zip(per_word) {
        for (acc, v) in diagonal.iter_mut().zip(d) {
            *acc += c * v;
        }
    }
    diagonal
}

/// Windowed trace of `Σ plus − Σ minus`.
pub fn windowed_trace(
    plus: &[OperatorWord],
    minus: &[OperatorWord],
    a: &ToeplitzMatrix,
    b: &ToeplitzMatrix,
    scheme: &TruncationScheme,
) -> Result<TraceReport> {
    let one = Complex64::new(1.0, 0.0);
    let terms: WeightedWords = plus
        .iter()
        .map(|w| (one, w.clone()))
        .chain(minus.iter().map(|w| (-one, w.clone())))
        .collect();
    weighted_trace(&terms, a, b, scheme)
}

fn word(s: &str) -> OperatorWord {
    s.parse().expect("literal word")
}

/// `Tr[A, B]` over the window.
pub fn commutator_trace(a: &ToeplitzMatrix, b: &ToeplitzMatrix, scheme: &TruncationScheme) -> Result<TraceReport> {
    windowed_trace(&[word("AB")], &[word("BA")], a, b, scheme)
}

/// `Tr((AB)ⁿ − (BA)ⁿ)` over the window.
pub fn word_power_trace(
    n: usize,
    a: &ToeplitzMatrix,
    b: &ToeplitzMatrix,
    scheme: &TruncationScheme,
) -> Result<TraceReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("word power must be at least 1".into()));
    }
    windowed_trace(&[word("AB").repeat(n)?], &[word("BA").repeat(n)?], a, b, scheme)
}

/// `Tr[p(A,B), q(A,B)]` with monomials ordered by `ordering`.
pub fn word_trace_for_polynomials(
    p: &QPolynomial2,
    q: &QPolynomial2,
    ordering: Ordering,
    a: &ToeplitzMatrix,
    b: &ToeplitzMatrix,
    scheme: &TruncationScheme,
) -> Result<TraceReport> {
    let terms = commutator_words(p, q, ordering);
    if terms.is_empty() {
        operands(a, b, scheme)?;
        return Ok(TraceReport::from_diagonal(
            vec![Complex64::new(0.0, 0.0); scheme.window()],
            scheme,
        ));
    }
    weighted_trace(&terms, a, b, scheme)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HallConductance {
    /// Real part of `−i · Tr[A, B]`.
    pub sigma: f64,
    /// Imaginary part of `−i · Tr[A, B]`; zero up to rounding.
    pub imaginary_residue: f64,
    pub report: TraceReport,
}

/// `−i · Tr[A, B]`.
pub fn hall_conductance(a: &ToeplitzMatrix, b: &ToeplitzMatrix, scheme: &TruncationScheme) -> Result<HallConductance> {
    let report = commutator_trace(a, b, scheme)?;
    let v = Complex64::new(0.0, -1.0) * report.value;
    Ok(HallConductance {
        sigma: v.re,
        imaginary_residue: v.im,
        report,
    })
}
