//! Random values for the property suites. Proptest strategies drive the
//! small algebraic laws; the seeded generators drive the suites that need a
//! fixed case count.

use eaqcc::pauli::{CheckMatrix, Gf4, Gf4Matrix, Gf4Poly};
use eaqcc::poly::{LaurentPoly, PolyMatrix, RationalPoly};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Laurent polynomials with exponents in `[-4, 5]`.
pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (0u64..1024).prop_map(|m| LaurentPoly::from_mask(m).shift(-4))
}

pub fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    (1u64..1024).prop_map(|m| LaurentPoly::from_mask(m).shift(-4))
}

pub fn rational() -> impl Strategy<Value = RationalPoly> {
    (laurent(), (1u64..64)).prop_map(|(n, d)| RationalPoly::new(n, LaurentPoly::from_mask(d)).unwrap())
}

pub fn nonzero_rational() -> impl Strategy<Value = RationalPoly> {
    (nonzero_laurent(), (1u64..64)).prop_map(|(n, d)| RationalPoly::new(n, LaurentPoly::from_mask(d)).unwrap())
}

/// Polynomial with exponents in `[0, degree]`.
pub fn poly(rng: &mut ChaCha8Rng, degree: u32) -> LaurentPoly {
    LaurentPoly::from_mask(rng.gen_range(0..1u64 << (degree + 1)))
}

pub fn poly_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, degree: u32) -> PolyMatrix {
    let rows = (0..rows)
        .map(|_| (0..cols).map(|_| poly(rng, degree)).collect())
        .collect();
    PolyMatrix::from_poly_rows(rows).unwrap()
}

pub fn check_matrix(rng: &mut ChaCha8Rng, r: usize, n: usize, degree: u32) -> CheckMatrix {
    CheckMatrix::new(poly_matrix(rng, r, n, degree), poly_matrix(rng, r, n, degree)).unwrap()
}

/// A single-row GF(4) generator with at least one nonzero entry.
pub fn gf4_generator(rng: &mut ChaCha8Rng, cols: usize, degree: u32) -> Gf4Matrix {
    loop {
        let row: Vec<Gf4Poly> = (0..cols)
            .map(|_| {
                (0..=degree as i64).fold(Gf4Poly::zero(), |acc, e| {
                    &acc + &Gf4Poly::term(Gf4::ALL[rng.gen_range(0..4)], e)
                })
            })
            .collect();
        if row.iter().any(|p| !p.is_zero()) {
            return Gf4Matrix::new(cols, vec![row]).unwrap();
        }
    }
}

/// Check matrix with `1..=max_r` rows and `1..=max_n` columns.
pub fn sized_check_matrix(rng: &mut ChaCha8Rng, max_r: usize, max_n: usize, degree: u32) -> CheckMatrix {
    let r = rng.gen_range(1..=max_r);
    let n = rng.gen_range(1..=max_n);
    check_matrix(rng, r, n, degree)
}
