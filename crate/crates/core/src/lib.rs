//! Truncated traces of commutators of Toeplitz operators on Fock space, with
//! the exact polynomial and Hardy-space machinery they are compared against.

pub mod error;
pub mod fock;
pub mod hardy;
pub mod landau;
pub mod poisson;
pub mod special;
pub mod trace;

pub use error::{Error, Result};
pub use fock::{
    build_toeplitz, build_toeplitz_with, matrix_element, shift_weights, smooth_symbol,
    switch_integral_check, Axis, BasisMember, BasisTag, BuildOptions, PlanarSymbol,
    SeriesConfig, SwitchFunction, SwitchKind, ToeplitzMatrix,
};
