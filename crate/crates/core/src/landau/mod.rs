//! Higher Landau levels: matrices of switch symbols on level 1 and on the
//! cumulative space of levels 0 and 1.

pub mod basis;
mod levels;

pub use basis::{basis_value, LandauBasis, MAX_LEVEL};
pub use levels::{cumulative_basis, cumulative_matrix, level_commutator_trace, level_matrix, level_matrix_element};
