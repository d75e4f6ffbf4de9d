//! Direct two-dimensional quadrature of `⟨ψ_a, f ψ_b⟩`, used as an
//! independent check on the series and level-combination paths.

use ndarray::Array2;
use num_complex::Complex64;

use super::matrix::BasisMember;
use super::symbol::{Axis, PlanarSymbol};
use crate::landau::basis::basis_value;
use crate::special::composite_nodes;

const PANEL_WIDTH: f64 = 1.0;

fn radius(basis: &[BasisMember]) -> f64 {
    let top = basis
        .iter()
        .map(|m| m.label + 2 * m.level as i64)
        .max()
        .unwrap_or(0)
        .max(0);
    (2.0 * top as f64 + 2.0).sqrt() + 8.0
}

/// `⟨ψ_a, w ψ_b⟩` for all pairs in `basis`, where `w` depends on one
/// coordinate only.
fn weighted_gram(
    basis: &[BasisMember],
    axis: Axis,
    breaks: &[f64],
    weight: impl Fn(f64) -> f64,
) -> Array2<Complex64> {
    let r = radius(basis);
    let along = composite_nodes(-r, r, breaks, PANEL_WIDTH);
    let across = composite_nodes(-r, r, &[], PANEL_WIDTH);
    let nb = basis.len();
    let mut out = Array2::<Complex64>::zeros((nb, nb));
    let mut values = Array2::<Complex64>::zeros((nb, across.len()));
    let mut weighted = Array2::<Complex64>::zeros((across.len(), nb));
    for &(s, ws) in &along {
        let lambda = weight(s);
        if lambda == 0.0 {
            continue;
        }
        for (k, &(o, wo)) in across.iter().enumerate() {
            let z = match axis {
                Axis::First => Complex64::new(s, o),
                Axis::Second => Complex64::new(o, s),
            };
            for (a, member) in basis.iter().enumerate() {
                let v = basis_value(*member, z);
                values[[a, k]] = v.conj();
                weighted[[k, a]] = v * (wo * ws * lambda);
            }
        }
        out += &values.dot(&weighted);
    }
    out
}

/// Matrix of the symbol in `basis` by quadrature.
pub fn quadrature_matrix(symbol: &PlanarSymbol, basis: &[BasisMember]) -> Array2<Complex64> {
    let profile = symbol.effective_profile();
    weighted_gram(basis, symbol.axis, &profile.breakpoints(), |s| profile.eval(s))
}

/// Single entry `⟨ψ_row, f ψ_col⟩` by quadrature.
pub fn quadrature_element(symbol: &PlanarSymbol, row: BasisMember, col: BasisMember) -> Complex64 {
    quadrature_matrix(symbol, &[row, col])[[0, 1]]
}

/// Inner products `⟨ψ_a, ψ_b⟩` by quadrature.
pub fn gram_matrix(basis: &[BasisMember]) -> Array2<Complex64> {
    weighted_gram(basis, Axis::First, &[], |_| 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::switch::SwitchFunction;

    fn members(level: usize, labels: std::ops::Range<i64>) -> Vec<BasisMember> {
        labels.map(|label| BasisMember { level, label }).collect()
    }

    #[test]
    fn gram_is_identity_on_small_basis() {
        let mut basis = members(0, 0..6);
        basis.extend(members(1, -1..5));
        let g = gram_matrix(&basis);
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((g[[i, j]] - want).norm() < 1e-12, "({i},{j}) {}", g[[i, j]]);
            }
        }
    }

    #[test]
    fn heaviside_diagonal_is_one_half() {
        let sym = PlanarSymbol::new(SwitchFunction::heaviside(0.0).unwrap(), Axis::Second);
        let basis = members(0, 0..4);
        let a = quadrature_matrix(&sym, &basis);
        for i in 0..4 {
            assert!((a[[i, i]] - 0.5).norm() < 1e-13);
        }
    }
}
