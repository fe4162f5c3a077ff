//! Design toolkit for entanglement-assisted quantum convolutional codes.
//!
//! The pipeline runs bottom up through the modules:
//!
//! - [`poly`]: binary Laurent polynomials, rational functions, matrices.
//! - [`pauli`]: Pauli sequences, GF(4) codes and binary check matrices.
//! - [`symplectic`]: shifted symplectic products, row operations, expansion.
//! - [`gram_schmidt`]: reduction of the product matrix to ebit/ancilla form.
//! - [`circuit`]: gate algebra, encoder/decoder synthesis and verification.

pub mod circuit;
pub mod error;
pub mod gram_schmidt;
pub mod pauli;
pub mod poly;
pub mod symplectic;
mod text;

pub use error::{Error, Result};
pub use pauli::CheckMatrix;
pub use poly::{LaurentPoly, PolyMatrix, RationalPoly};
