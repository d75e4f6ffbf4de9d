use std::f64::consts::PI;

use num_complex::Complex64;

use principal_trace::fock::quadrature::{gram_matrix, quadrature_matrix};
use principal_trace::landau::{cumulative_matrix, level_commutator_trace, level_matrix, level_matrix_element, LandauBasis};
use principal_trace::trace::{commutator_trace, word_power_trace, TruncationScheme};
use principal_trace::{build_toeplitz, matrix_element, Axis, BuildOptions, PlanarSymbol, SwitchFunction};

fn heaviside(axis: Axis) -> PlanarSymbol {
    PlanarSymbol::new(SwitchFunction::heaviside(0.0).unwrap(), axis)
}

fn two_pi_i(v: Complex64) -> Complex64 {
    Complex64::new(0.0, 2.0 * PI) * v
}

#[test]
fn first_thirty_members_are_orthonormal() {
    let mut basis = LandauBasis::new(1).unwrap().members(30);
    basis.extend(LandauBasis::new(0).unwrap().members(30));
    let g = gram_matrix(&basis);
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((g[[i, j]] - want).norm() < 1e-8, "{:?} {:?}", basis[i], basis[j]);
        }
    }
}

#[test]
fn element_examples() {
    let first = heaviside(Axis::First);
    for m in [-1, 0, 5] {
        assert!((level_matrix_element(1, m, m, &first).unwrap().re - 0.5).abs() < 1e-10);
    }
    let q = level_matrix_element(0, 0, 1, &first).unwrap();
    let s = matrix_element(0, 1, &first).unwrap();
    assert!((q - s).norm() < 1e-9);
    let i = Complex64::new(0.0, 1.0);
    let ramp = SwitchFunction::linear_ramp(-0.6, 0.4).unwrap();
    for (m, n) in [(-1i64, 2i64), (3, 0), (1, 4)] {
        let a = level_matrix_element(1, m, n, &PlanarSymbol::new(ramp, Axis::First)).unwrap();
        let b = level_matrix_element(1, m, n, &PlanarSymbol::new(ramp, Axis::Second)).unwrap();
        assert!((b - i.powi((n - m) as i32) * a).norm() < 1e-10);
    }
}

#[test]
fn level_zero_and_cumulative_zero_match_fock() {
    let opts = BuildOptions::default();
    let sym = heaviside(Axis::Second);
    let fock = build_toeplitz(&sym, 20).unwrap();
    assert_eq!(level_matrix(0, &sym, 20, &opts).unwrap(), fock);
    assert_eq!(cumulative_matrix(0, &sym, 20, &opts).unwrap(), fock);
}

#[test]
fn level_one_block_matches_quadrature() {
    let sym = PlanarSymbol::new(SwitchFunction::erf_ramp(0.1, 0.6).unwrap(), Axis::Second);
    let a = level_matrix(1, &sym, 24, &BuildOptions::default()).unwrap();
    let q = quadrature_matrix(&sym, a.basis());
    for i in 0..24 {
        for j in 0..24 {
            assert!((a.get(i, j) - q[[i, j]]).norm() < 1e-9);
        }
    }
}

#[test]
fn level_traces_and_additivity() {
    let opts = BuildOptions::default();
    let (f1, f2) = (heaviside(Axis::First), heaviside(Axis::Second));
    let s = TruncationScheme::half_window(192).unwrap();
    let t0 = level_commutator_trace(0, &f1, &f2, &s, &opts).unwrap();
    let t1 = level_commutator_trace(1, &f1, &f2, &s, &opts).unwrap();
    assert!((two_pi_i(t0.value) - 1.0).norm() <= 1e-3);
    assert!((two_pi_i(t1.value) - 1.0).norm() <= 1e-2);

    let a1 = level_matrix(1, &f1, 192, &opts).unwrap();
    let b1 = level_matrix(1, &f2, 192, &opts).unwrap();
    let w1 = word_power_trace(2, &a1, &b1, &s).unwrap();
    assert!((two_pi_i(w1.value) - 0.5).norm() <= 2e-2);

    let ca = cumulative_matrix(1, &f1, 192, &opts).unwrap();
    let cb = cumulative_matrix(1, &f2, 192, &opts).unwrap();
    let tc = commutator_trace(&ca, &cb, &s).unwrap();
    assert!((two_pi_i(tc.value) - 2.0).norm() <= 1e-2);
    assert!((tc.value - t0.value - t1.value).norm() <= 1e-2);

    let a0 = level_matrix(0, &f1, 192, &opts).unwrap();
    let b0 = level_matrix(0, &f2, 192, &opts).unwrap();
    let w0 = word_power_trace(2, &a0, &b0, &s).unwrap();
    let wc = word_power_trace(2, &ca, &cb, &s).unwrap();
    assert!((wc.value - w0.value - w1.value).norm() <= 1e-2);
    assert!((two_pi_i(wc.value) - 1.0).norm() <= 2e-2);
}
