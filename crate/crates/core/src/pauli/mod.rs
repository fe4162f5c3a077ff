//! Pauli sequences, GF(4) codes, and binary polynomial check matrices.

mod check;
mod gf4;
mod seq;

pub use check::CheckMatrix;
pub use gf4::{gf4_import, gf4_rate_lower_bound, parse_gf4_poly, Gf4, Gf4Matrix, Gf4Poly};
pub use seq::{binary_to_pauli, parse_pauli_file, pauli_to_binary, Pauli, PauliFrameSeq};
