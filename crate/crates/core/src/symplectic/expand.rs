//! `l`-expansion of check matrices and of product matrices.
//!
//! Both work in the scaled-exponent ring: a polynomial in `E = D^(1/l)` is a
//! Laurent polynomial whose exponents count in units of `1/l`. Substituting
//! `D -> E` therefore leaves exponents unchanged, and flooring keeps
//! exponents divisible by `l`.

use super::OmegaMatrix;
use crate::error::{Error, Result};
use crate::pauli::CheckMatrix;
use crate::poly::{PolyMatrix, RationalPoly};

/// `(l·rows) x rows` matrix whose block `i` is `E^i · I`.
fn row_shifts(rows: usize, l: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(l * rows, rows);
    for i in 0..l {
        for a in 0..rows {
            m.set(i * rows + a, a, RationalPoly::monomial(i as i64));
        }
    }
    m
}

/// `cols x (l·cols)` matrix whose block `j` is `E^-j · I`.
fn column_shifts(cols: usize, l: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(cols, l * cols);
    for j in 0..l {
        for q in 0..cols {
            m.set(q, j * cols + q, RationalPoly::monomial(-(j as i64)));
        }
    }
    m
}

fn floor_all(m: &PolyMatrix, l: usize) -> PolyMatrix {
    let mut out = PolyMatrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let p = m.get(i, j).as_poly().expect("products of polynomials are polynomial");
            out.set(i, j, p.floor_fractional(l).into());
        }
    }
    out
}

fn require_polynomial(m: &PolyMatrix) -> Result<()> {
    match (0..m.rows()).find(|&i| m.row(i).iter().any(|v| !v.is_polynomial())) {
        Some(row) => Err(Error::RationalEntry { row: row + 1 }),
        None => Ok(()),
    }
}

fn check_factor(l: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::DimensionMismatch("expansion factor must be at least 1".into()));
    }
    Ok(())
}

/// `H_l(D) = ⌊R_l(E) H(E) C_l(E)⌋`: an `(l·r) x 2(l·n)` check matrix whose
/// row `i·r + a` is generator `a` advanced by `i` sub-frames, regrouped into
/// frames of `l·n` qubits.
pub fn expand(h: &CheckMatrix, l: usize) -> Result<CheckMatrix> {
    check_factor(l)?;
    require_polynomial(h.z())?;
    require_polynomial(h.x())?;
    if l == 1 {
        return Ok(h.clone());
    }
    let rl = row_shifts(h.r(), l);
    let cl = column_shifts(h.n(), l);
    let z = &(&rl * h.z()) * &cl;
    let x = &(&rl * h.x()) * &cl;
    CheckMatrix::new(floor_all(&z, l), floor_all(&x, l))
}

/// `Ω_l(D) = ⌊R_l(E) Ω(E) R_lᵀ(E^-1)⌋`, the product matrix of the
/// `l`-expanded code, computed from `Ω` alone.
pub fn expanded_omega(omega: &OmegaMatrix, l: usize) -> Result<OmegaMatrix> {
    check_factor(l)?;
    require_polynomial(omega.matrix())?;
    if l == 1 {
        return Ok(omega.clone());
    }
    let rl = row_shifts(omega.size(), l);
    let rl_rev = rl.transpose().time_reverse();
    let m = &(&rl * omega.matrix()) * &rl_rev;
    OmegaMatrix::from_matrix(floor_all(&m, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;
    use crate::symplectic::omega_matrix;

    fn p(exps: &[i64]) -> RationalPoly {
        LaurentPoly::from_exponents(exps.iter().copied()).into()
    }

    fn single() -> CheckMatrix {
        CheckMatrix::new(
            PolyMatrix::from_rows(vec![vec![p(&[1])]]).unwrap(),
            PolyMatrix::from_rows(vec![vec![p(&[0])]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn two_expansion_of_single_generator() {
        let g2 = expand(&single(), 2).unwrap();
        let z = PolyMatrix::from_rows(vec![vec![p(&[]), p(&[0])], vec![p(&[1]), p(&[])]]).unwrap();
        let x = PolyMatrix::from_rows(vec![vec![p(&[0]), p(&[])], vec![p(&[]), p(&[0])]]).unwrap();
        assert_eq!(g2, CheckMatrix::new(z, x).unwrap());
    }

    #[test]
    fn identity_expansion() {
        assert_eq!(expand(&single(), 1).unwrap(), single());
        let om = omega_matrix(&single());
        assert_eq!(expanded_omega(&om, 1).unwrap(), om);
    }

    #[test]
    fn zero_factor_is_rejected() {
        assert!(expand(&single(), 0).is_err());
    }

    #[test]
    fn rational_input_is_rejected() {
        let mut h = single();
        h.set_x(0, 0, RationalPoly::one().div(&p(&[0, 1])).unwrap());
        assert_eq!(expand(&h, 2), Err(Error::RationalEntry { row: 1 }));
    }
}
