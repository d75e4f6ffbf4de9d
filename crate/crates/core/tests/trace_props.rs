use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use principal_trace::poisson::parse_polynomial;
use principal_trace::trace::{
    commutator_trace, hall_conductance, richardson_extrapolate, weighted_trace, windowed_trace,
    word_power_trace, word_trace_for_polynomials, OperatorWord, Ordering, TruncationScheme,
};
use principal_trace::{build_toeplitz, Axis, PlanarSymbol, SwitchFunction, ToeplitzMatrix};

fn pair(profile: SwitchFunction, b: f64, size: usize) -> (ToeplitzMatrix, ToeplitzMatrix) {
    let f = |axis| {
        let sym = PlanarSymbol::new(profile, axis).with_field_strength(b).unwrap();
        build_toeplitz(&sym, size).unwrap()
    };
    (f(Axis::First), f(Axis::Second))
}

fn heaviside_pair(size: usize) -> (ToeplitzMatrix, ToeplitzMatrix) {
    pair(SwitchFunction::heaviside(0.0).unwrap(), 2.0, size)
}

fn two_pi_i(v: Complex64) -> Complex64 {
    Complex64::new(0.0, 2.0 * PI) * v
}

#[test]
fn basic_commutator_and_hall_value() {
    let (a, b) = heaviside_pair(256);
    let s = TruncationScheme::half_window(256).unwrap();
    let r = commutator_trace(&a, &b, &s).unwrap();
    assert!((r.value - Complex64::new(0.0, -1.0 / (2.0 * PI))).norm() <= 1e-3 / (2.0 * PI));
    let h = hall_conductance(&a, &b, &s).unwrap();
    assert!((h.sigma + 1.0 / (2.0 * PI)).abs() <= 1e-4);
    assert!(h.imaginary_residue.abs() < 1e-15);
}

#[test]
fn word_examples() {
    let (a, b) = heaviside_pair(256);
    let s = TruncationScheme::half_window(256).unwrap();
    let r = windowed_trace(&["ABAB".parse().unwrap()], &["BABA".parse().unwrap()], &a, &b, &s).unwrap();
    assert!((two_pi_i(r.value) - 0.5).norm() <= 1e-3);
    let p = parse_polynomial("x^3*y^2").unwrap();
    let q = parse_polynomial("y").unwrap();
    let r = word_trace_for_polynomials(&p, &q, Ordering::LeftNormal, &a, &b, &s).unwrap();
    assert!((two_pi_i(r.value) - 1.0 / 3.0).norm() <= 2e-3);
}

#[test]
fn ramp_pair_matches_heaviside_pair() {
    let s = TruncationScheme::half_window(128).unwrap();
    let (a, b) = heaviside_pair(128);
    let h = commutator_trace(&a, &b, &s).unwrap().value;
    let (a, b) = pair(SwitchFunction::linear_ramp(-1.0, 1.0).unwrap(), 2.0, 128);
    let r = commutator_trace(&a, &b, &s).unwrap().value;
    assert!((two_pi_i(r) - two_pi_i(h)).norm() <= 2e-3);
}

#[test]
fn field_strength_invariance() {
    let s = TruncationScheme::half_window(128).unwrap();
    let ramp = SwitchFunction::erf_ramp(0.2, 0.5).unwrap();
    let (a, b) = pair(ramp, 2.0, 128);
    let base = commutator_trace(&a, &b, &s).unwrap().value;
    for field in [1.0, 4.0] {
        let (a, b) = pair(ramp, field, 128);
        let v = commutator_trace(&a, &b, &s).unwrap().value;
        assert!((two_pi_i(v) - two_pi_i(base)).norm() <= 1e-3, "b={field}");
    }
}

#[test]
fn window_stabilizes_and_diagonal_decays() {
    let (a, b) = heaviside_pair(128);
    let s = TruncationScheme::half_window(128).unwrap();
    let r = commutator_trace(&a, &b, &s).unwrap();
    assert!(r.half_window_change() <= r.tail_estimate);
    // summands oscillate with period 4; their envelope decays until the
    // truncation at M starts to dominate
    let envelope: Vec<f64> = r
        .diagonal
        .chunks(4)
        .map(|c| c.iter().map(|d| d.norm()).fold(0.0, f64::max))
        .collect();
    assert!(envelope[..8].windows(2).all(|w| w[1] < w[0]), "{envelope:?}");
    assert!(envelope[7] < 1e-12 * envelope[0]);
}

#[test]
fn full_window_cyclicity_trap() {
    let (a, b) = heaviside_pair(64);
    let s = TruncationScheme::full_window(64).unwrap();
    for word in ["AB", "AAB", "ABBAB", "AABAB"] {
        let w: OperatorWord = word.parse().unwrap();
        for k in 1..w.len() {
            let r = windowed_trace(&[w.clone()], &[w.rotate(k)], &a, &b, &s).unwrap();
            assert_eq!(r.value, Complex64::new(0.0, 0.0), "{word} rotated by {k}");
            // the literal diagonal cancels too, up to rounding
            let literal: Complex64 = r.diagonal.iter().sum();
            assert!(literal.norm() < 1e-13, "{word} rotated by {k}: {literal}");
        }
    }
    assert_eq!(word_power_trace(2, &a, &b, &s).unwrap().value, Complex64::new(0.0, 0.0));
}

#[test]
fn orderings_agree() {
    let (a, b) = heaviside_pair(128);
    let s = TruncationScheme::half_window(128).unwrap();
    for (p, q) in [("x*y", "y"), ("x^2*y", "y^2"), ("x*y^2 + 3*x", "x*y")] {
        let p = parse_polynomial(p).unwrap();
        let q = parse_polynomial(q).unwrap();
        let l = word_trace_for_polynomials(&p, &q, Ordering::LeftNormal, &a, &b, &s).unwrap();
        let r = word_trace_for_polynomials(&p, &q, Ordering::RightNormal, &a, &b, &s).unwrap();
        assert!((l.value - r.value).norm() <= 1e-6);
    }
}

#[test]
fn extrapolation_does_not_lose_accuracy() {
    let (a, b) = heaviside_pair(256);
    let samples: Vec<(usize, Complex64)> = [64usize, 128, 256]
        .iter()
        .map(|&m| {
            let s = TruncationScheme::half_window(m).unwrap();
            let v = commutator_trace(&a.leading(m).unwrap(), &b.leading(m).unwrap(), &s).unwrap().value;
            (m, two_pi_i(v))
        })
        .collect();
    let e = richardson_extrapolate(&samples).unwrap();
    assert!((e.value - 1.0).norm() < (samples[2].1 - 1.0).norm());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutator_diagonal_is_imaginary(
        c in -1.5..0.5f64, w in 0.1..2.0f64, kind in 0..3usize, m in 8..48usize,
    ) {
        let profile = match kind {
            0 => SwitchFunction::heaviside(c).unwrap(),
            1 => SwitchFunction::linear_ramp(c, c + w).unwrap(),
            _ => SwitchFunction::erf_ramp(c, w).unwrap(),
        };
        let (a, b) = pair(profile, 2.0, m);
        let s = TruncationScheme::half_window(m).unwrap();
        let r = commutator_trace(&a, &b, &s).unwrap();
        prop_assert!(r.max_relative_real_part() <= 1e-10);
        prop_assert!(r.tail_estimate >= r.diagonal[r.window - 1].norm());
        // ABA·B − B·ABA has Hermitian factors as well
        let terms = vec![
            (Complex64::new(1.0, 0.0), "ABAB".parse().unwrap()),
            (Complex64::new(-1.0, 0.0), "BABA".parse().unwrap()),
        ];
        let r = weighted_trace(&terms, &a, &b, &s).unwrap();
        prop_assert!(r.max_relative_real_part() <= 1e-10);
    }
}
