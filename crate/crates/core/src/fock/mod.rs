//! Fock-space building blocks: switch symbols, the reproducing kernel,
//! truncated Fock–Toeplitz matrices and the weighted shift `P (z/|z|) P`.

pub mod kernel;
pub mod matrix;
pub mod quadrature;
pub mod series;
pub mod shift;
pub mod switch;
pub mod symbol;

pub use kernel::{kernel_eval, kernel_eval_magnetic, translation_phase, wedge, KernelPoint};
pub use matrix::{build_toeplitz, build_toeplitz_with, matrix_element, BasisMember, BasisTag, BuildOptions, ToeplitzMatrix};
pub use series::{SeriesConfig, SeriesEngine};
pub use shift::{shift_weights, ShiftIndex, WeightedShift};
pub use switch::{smooth_symbol, switch_integral_check, SmoothedProfile, SwitchFunction, SwitchKind};
pub use symbol::{Axis, PlanarSymbol};
