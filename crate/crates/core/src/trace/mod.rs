//! Windowed diagonal traces of words in two truncated operators.
//!
//! The trace of a commutator of finite matrices is zero, so the trace-class
//! limit is recovered by truncating the operators at `M` and summing the
//! diagonal only over `m < N` with `N < M`.

mod engine;
mod extrapolate;
mod scheme;
mod word;

pub use engine::{
    commutator_trace, hall_conductance, weighted_trace, windowed_trace, word_power_trace,
    word_trace_for_polynomials, HallConductance, TraceReport,
};
pub use extrapolate::{richardson_extrapolate, Extrapolation};
pub use scheme::TruncationScheme;
pub use word::to_complex;
pub use word::{commutator_words, expand_polynomial, Letter, OperatorWord, Ordering, WeightedWords};
