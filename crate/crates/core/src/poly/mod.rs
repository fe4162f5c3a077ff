//! Exact arithmetic over GF(2): Laurent polynomials in the delay operator
//! `D`, their ratios, and matrices of ratios.

mod laurent;
mod matrix;
mod parse;
mod rational;

pub use laurent::LaurentPoly;
pub use matrix::PolyMatrix;
pub(crate) use parse::Scanner;
pub use parse::{parse_poly, parse_rational};
pub use rational::RationalPoly;
