use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

use principal_trace::fock::{kernel_eval, kernel_eval_magnetic, translation_phase, wedge, KernelPoint};
use principal_trace::special::integrate;
use principal_trace::{build_toeplitz, matrix_element, smooth_symbol, Axis, PlanarSymbol, SwitchFunction};

fn point(r: f64, t: f64) -> Complex64 {
    Complex64::from_polar(r, t)
}

fn heaviside(axis: Axis) -> PlanarSymbol {
    PlanarSymbol::new(SwitchFunction::heaviside(0.0).unwrap(), axis)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn kernel_forms_agree(rz in 0.0..10.0f64, tz in 0.0..6.3f64, rw in 0.0..10.0f64, tw in 0.0..6.3f64) {
        let p = KernelPoint::new(point(rz, tz), point(rw, tw));
        let a = kernel_eval(p);
        let b = kernel_eval_magnetic(p);
        let scale = a.norm().max(f64::MIN_POSITIVE);
        prop_assert!((a - b).norm() / scale <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn translation_covariance(
        u in (-5.0..5.0f64, -5.0..5.0f64),
        v in (-5.0..5.0f64, -5.0..5.0f64),
        t in (-5.0..5.0f64, -5.0..5.0f64),
    ) {
        let (u, v, t) = (Complex64::new(u.0, u.1), Complex64::new(v.0, v.1), Complex64::new(t.0, t.1));
        let shifted = kernel_eval_magnetic(KernelPoint::new(u - t, v - t));
        let base = kernel_eval_magnetic(KernelPoint::new(u, v));
        prop_assert!((shifted.norm() - base.norm()).abs() <= 1e-12);
        let restored = shifted * translation_phase(t, u).conj() * translation_phase(t, v);
        prop_assert!((restored - base).norm() <= 1e-12);
    }

    #[test]
    fn switch_profiles_are_monotone_switches(
        kind in 0..3usize, p in -3.0..3.0f64, q in 0.05..3.0f64, x in -10.0..10.0f64, dx in 0.0..2.0f64,
    ) {
        let f = match kind {
            0 => SwitchFunction::heaviside(p).unwrap(),
            1 => SwitchFunction::linear_ramp(p, p + q).unwrap(),
            _ => SwitchFunction::erf_ramp(p, q).unwrap(),
        };
        let (c, d) = f.interpolation_interval();
        let v = f.eval(x);
        prop_assert!((0.0..=1.0).contains(&v));
        prop_assert!(f.eval(x + dx) >= v);
        if x < c { prop_assert_eq!(v, 0.0); }
        if x > d { prop_assert_eq!(v, 1.0); }
    }
}

#[test]
fn kernel_examples() {
    let z = Complex64::new(1.3, -0.4);
    assert!((kernel_eval(KernelPoint::new(z, z)) - 1.0 / PI).norm() < 1e-15);
    let w = Complex64::new(-0.7, 2.0);
    let origin = kernel_eval(KernelPoint::new(Complex64::new(0.0, 0.0), w));
    assert!((origin - (-w.norm_sqr() / 2.0).exp() / PI).norm() < 1e-16);
    let (z, w) = (Complex64::new(1.0, 1.0), Complex64::new(2.0, 0.0));
    let m = kernel_eval(KernelPoint::new(z, w)).norm();
    assert!((m - (-(z - w).norm_sqr() / 2.0).exp() / PI).abs() < 1e-15);
    assert_eq!(wedge(Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)), 1.0);
}

#[test]
fn smoothed_ramp_matches_numerical_convolution() {
    let ramp = SwitchFunction::linear_ramp(0.0, 1.0).unwrap();
    let u = 0.5;
    let numeric = integrate(u - 12.0, u + 12.0, &[0.0, 1.0], 0.25, |x| {
        ramp.eval(x) * (-(x - u) * (x - u)).exp()
    }) / PI.sqrt();
    assert!((smooth_symbol(&ramp).eval(u) - numeric).abs() < 1e-10);
    let h = smooth_symbol(&SwitchFunction::heaviside(0.0).unwrap());
    assert_eq!(h.eval(0.0), 0.5);
    assert_eq!(h.eval(50.0), 1.0);
}

#[test]
fn matrix_element_examples() {
    let sym = heaviside(Axis::First);
    assert_eq!(matrix_element(0, 0, &sym).unwrap(), Complex64::new(0.5, 0.0));
    for m in [1, 7, 33, 90] {
        assert!((matrix_element(m, m, &sym).unwrap().re - 0.5).abs() < 1e-14);
    }
    assert!((matrix_element(0, 1, &sym).unwrap().re - 0.282_094_791_773_878_1).abs() < 1e-15);
    assert!(matrix_element(0, 2, &sym).unwrap().norm() < 1e-16);
    let bad = SwitchFunction::heaviside(f64::NAN);
    assert!(bad.is_err());
}

#[test]
fn one_by_one_and_rotation() {
    let a = build_toeplitz(&heaviside(Axis::First), 1).unwrap();
    assert_eq!(a.get(0, 0), Complex64::new(0.5, 0.0));
    let ramp = SwitchFunction::erf_ramp(-0.3, 0.8).unwrap();
    let a = build_toeplitz(&PlanarSymbol::new(ramp, Axis::First), 30).unwrap();
    let b = build_toeplitz(&PlanarSymbol::new(ramp, Axis::Second), 30).unwrap();
    let i = Complex64::new(0.0, 1.0);
    for m in 0..30 {
        for n in 0..30 {
            // B = D̄ A D with D = diag(iⁿ)
            let want = i.powi(m as i32).conj() * a.get(m, n) * i.powi(n as i32);
            assert!((b.get(m, n) - want).norm() < 1e-14);
            assert_eq!(a.get(m, n).im, 0.0);
            assert_eq!(a.get(m, n), a.get(n, m));
        }
    }
}

#[test]
fn spectrum_lies_in_unit_interval() {
    for sym in [heaviside(Axis::First), PlanarSymbol::new(SwitchFunction::linear_ramp(-1.0, 2.0).unwrap(), Axis::First)] {
        let a = build_toeplitz(&sym, 64).unwrap();
        assert!(a.hermiticity_defect() < 1e-15);
        let real = DMatrix::from_fn(64, 64, |i, j| a.get(i, j).re);
        let eig = real.symmetric_eigen().eigenvalues;
        let (lo, hi) = eig.iter().fold((f64::MAX, f64::MIN), |(l, h), v| (l.min(*v), h.max(*v)));
        assert!(lo >= -1e-10 && hi <= 1.0 + 1e-10, "spectrum [{lo}, {hi}]");
    }
}

#[test]
fn builds_are_bit_identical() {
    let sym = PlanarSymbol::new(SwitchFunction::linear_ramp(-0.3, 0.6).unwrap(), Axis::Second);
    let a = build_toeplitz(&sym, 48).unwrap();
    let fresh = principal_trace::fock::SeriesEngine::new(&sym.profile, 47, Default::default());
    for m in [0usize, 13, 47] {
        for n in [0usize, 20, 47] {
            let phase = Complex64::new(0.0, 1.0).powi(n as i32 - m as i32);
            assert_eq!(a.get(m, n), phase * fresh.entry(m, n).unwrap());
        }
    }
}
