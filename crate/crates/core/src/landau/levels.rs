//! Level-1 and cumulative matrices as exact combinations of level-0 entries.
//!
//! With `u_m = (m+1) zᵐ − z̄ z^{m+1}` and `J(α, β) = ∫ z̄^α z^β Λ e^{−|z|²}`,
//! `⟨u_m, Λ u_n⟩ = (m+1)(n+1) J(m,n) − (m+n+2) J(m+1,n+1) + J(m+2,n+2)`,
//! and each `J` is a rescaled level-0 entry. Normalizing gives
//!
//! ```text
//! L1(m,n) = sqrt((m+1)(n+1)) A(m,n) − (m+n+2) A(m+1,n+1) + sqrt((m+2)(n+2)) A(m+2,n+2)
//! X(m,n)  = sqrt(n+1) A(m,n) − sqrt(m+1) A(m+1,n+1)          (= ⟨φ_m, Λ ψ_n⟩)
//! ```
//!
//! where terms with a negative level-0 index vanish.

use ndarray::Array2;
use num_complex::Complex64;

use super::basis::LandauBasis;
use crate::error::{Error, Result};
use crate::fock::matrix::{axis_first_block, rotate};
use crate::fock::quadrature::quadrature_element;
use crate::fock::{build_toeplitz_with, BasisMember, BasisTag, BuildOptions, PlanarSymbol, ToeplitzMatrix};
use crate::trace::{commutator_trace, TraceReport, TruncationScheme};

struct LevelZero<'a>(&'a Array2<f64>);

impl LevelZero<'_> {
    fn at(&self, m: i64, n: i64) -> f64 {
        if m < 0 || n < 0 {
            0.0
        } else {
            self.0[[m as usize, n as usize]]
        }
    }

    fn level_one(&self, m: i64, n: i64) -> f64 {
        let (mf, nf) = (m as f64, n as f64);
        let first = if m >= 0 && n >= 0 {
            ((mf + 1.0) * (nf + 1.0)).sqrt() * self.at(m, n)
        } else {
            0.0
        };
        first - (mf + nf + 2.0) * self.at(m + 1, n + 1)
            + ((mf + 2.0) * (nf + 2.0)).sqrt() * self.at(m + 2, n + 2)
    }

    /// `⟨φ_m, Λ ψ_n⟩`, level 0 on the left.
    fn cross(&self, m: i64, n: i64) -> f64 {
        let first = if n >= 0 { ((n + 1) as f64).sqrt() * self.at(m, n) } else { 0.0 };
        first - ((m + 1) as f64).sqrt() * self.at(m + 1, n + 1)
    }

    fn entry(&self, row: BasisMember, col: BasisMember) -> f64 {
        match (row.level, col.level) {
            (0, 0) => self.at(row.label, col.label),
            (0, 1) => self.cross(row.label, col.label),
            (1, 0) => self.cross(col.label, row.label),
            _ => self.level_one(row.label, col.label),
        }
    }
}

fn assemble(
    symbol: &PlanarSymbol,
    basis: Vec<BasisMember>,
    tag: BasisTag,
    options: &BuildOptions,
) -> Result<ToeplitzMatrix> {
    options.check_size(basis.len())?;
    let top = basis.iter().map(|b| b.label + 2 * b.level as i64).max().unwrap_or(0);
    let block = axis_first_block(&symbol.effective_profile(), top as usize + 1, options.series)?;
    let zero = LevelZero(&block);
    let real = Array2::from_shape_fn((basis.len(), basis.len()), |(i, j)| zero.entry(basis[i], basis[j]));
    let labels: Vec<i64> = basis.iter().map(|b| b.label).collect();
    let entries = rotate(real.view(), &labels, &labels, symbol.axis);
    Ok(ToeplitzMatrix::from_parts(entries, *symbol, tag, basis))
}

/// Matrix of the symbol on Landau level `level`, first `size` members.
pub fn level_matrix(
    level: usize,
    symbol: &PlanarSymbol,
    size: usize,
    options: &BuildOptions,
) -> Result<ToeplitzMatrix> {
    let basis = LandauBasis::new(level)?;
    if level == 0 {
        return build_toeplitz_with(symbol, size, options);
    }
    assemble(symbol, basis.members(size), BasisTag::LandauLevel(level), options)
}

/// `⟨ψ_{j,m}, f ψ_{j,n}⟩` by direct two-dimensional quadrature.
pub fn level_matrix_element(level: usize, m: i64, n: i64, symbol: &PlanarSymbol) -> Result<Complex64> {
    let basis = LandauBasis::new(level)?;
    basis.check_label(m)?;
    basis.check_label(n)?;
    Ok(quadrature_element(
        symbol,
        BasisMember { level, label: m },
        BasisMember { level, label: n },
    ))
}

/// Members of levels `0..=levels`, ordered by angular-momentum label and then
/// by level: `(1,−1), (0,0), (1,0), (0,1), (1,1), …`.
pub fn cumulative_basis(levels: usize, size: usize) -> Result<Vec<BasisMember>> {
    if levels > super::MAX_LEVEL {
        return Err(Error::UnsupportedLevel(levels));
    }
    let mut out = Vec::with_capacity(size);
    let mut label = -(levels as i64);
    while out.len() < size {
        for level in 0..=levels {
            if label >= -(level as i64) && out.len() < size {
                out.push(BasisMember { level, label });
            }
        }
        label += 1;
    }
    Ok(out)
}

/// Matrix of the symbol compressed to the sum of levels `0..=levels`,
/// including the cross-level blocks.
pub fn cumulative_matrix(
    levels: usize,
    symbol: &PlanarSymbol,
    size: usize,
    options: &BuildOptions,
) -> Result<ToeplitzMatrix> {
    let basis = cumulative_basis(levels, size)?;
    if levels == 0 {
        return build_toeplitz_with(symbol, size, options);
    }
    assemble(symbol, basis, BasisTag::Cumulative(levels), options)
}

/// Windowed `Tr[T_f, T_g]` on Landau level `level`.
pub fn level_commutator_trace(
    level: usize,
    first: &PlanarSymbol,
    second: &PlanarSymbol,
    scheme: &TruncationScheme,
    options: &BuildOptions,
) -> Result<TraceReport> {
    let a = level_matrix(level, first, scheme.outer(), options)?;
    let b = level_matrix(level, second, scheme.outer(), options)?;
    commutator_trace(&a, &b, scheme)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::quadrature::quadrature_matrix;
    use crate::fock::{Axis, SwitchFunction};

    fn heaviside(axis: Axis) -> PlanarSymbol {
        PlanarSymbol::new(SwitchFunction::heaviside(0.0).unwrap(), axis)
    }

    #[test]
    fn interleaving() {
        let b = cumulative_basis(1, 5).unwrap();
        let got: Vec<(usize, i64)> = b.iter().map(|m| (m.level, m.label)).collect();
        assert_eq!(got, vec![(1, -1), (0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(cumulative_basis(2, 3).unwrap_err(), Error::UnsupportedLevel(2));
    }

    #[test]
    fn level_one_diagonal_is_one_half() {
        let a = level_matrix(1, &heaviside(Axis::First), 20, &BuildOptions::default()).unwrap();
        for i in 0..20 {
            assert!((a.get(i, i).re - 0.5).abs() < 1e-14);
        }
        assert_eq!(a.basis()[0], BasisMember { level: 1, label: -1 });
    }

    #[test]
    fn unit_symbol_gives_identity() {
        // a Heaviside step far to the left is 1 on the whole support
        let sym = PlanarSymbol::new(SwitchFunction::heaviside(-40.0).unwrap(), Axis::Second);
        let a = cumulative_matrix(1, &sym, 12, &BuildOptions::default()).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((a.get(i, j) - want).norm() < 1e-13, "({i},{j})");
            }
        }
    }

    #[test]
    fn combination_matches_quadrature() {
        for profile in [SwitchFunction::heaviside(0.3).unwrap(), SwitchFunction::linear_ramp(-1.0, 0.5).unwrap()] {
            for axis in [Axis::First, Axis::Second] {
                let sym = PlanarSymbol::new(profile, axis);
                let a = cumulative_matrix(1, &sym, 14, &BuildOptions::default()).unwrap();
                let q = quadrature_matrix(&sym, a.basis());
                for i in 0..14 {
                    for j in 0..14 {
                        assert!((a.get(i, j) - q[[i, j]]).norm() < 1e-12, "({i},{j}) {:?}", axis);
                    }
                }
            }
        }
    }

    #[test]
    fn single_element_by_quadrature() {
        let v = level_matrix_element(0, 0, 1, &heaviside(Axis::First)).unwrap();
        assert!((v.re - 0.5 / std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!(level_matrix_element(1, -2, 0, &heaviside(Axis::First)).is_err());
        assert_eq!(
            level_matrix_element(2, 0, 0, &heaviside(Axis::First)).unwrap_err(),
            Error::UnsupportedLevel(2)
        );
    }
}
