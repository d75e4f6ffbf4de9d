//! Exact polynomial calculus in two real variables: Poisson brackets,
//! region integrals and principal-function trace predictions.

mod calculus;
mod gaussian;
mod parse;
mod polynomial;
mod principal;

pub use calculus::{integrate_unit_disc, integrate_unit_square, poisson_bracket, ExactValue};
pub use gaussian::GaussianRational;
pub use parse::{parse_gaussian, parse_polynomial, parse_univariate};
pub(crate) use parse::Cursor;
pub use polynomial::{Exponents, QPolynomial2, UniPolynomial};
pub use principal::{chhp_prediction, collapsing_check, index_at, ChhpPrediction, PrincipalFunction, Region};
