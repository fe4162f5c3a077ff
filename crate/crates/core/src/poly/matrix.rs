//! Dense matrices over the field of binary rational functions.

use std::fmt;
use std::ops::Mul;

use super::{LaurentPoly, RationalPoly};
use crate::error::{Error, Result};

/// Rectangular grid of rational polynomials, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![RationalPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RationalPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let n = rows.len();
        Ok(PolyMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_poly_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(RationalPoly::from).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RationalPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [RationalPoly] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &RationalPoly> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RationalPoly::is_zero)
    }

    pub fn is_polynomial(&self) -> bool {
        self.entries.iter().all(RationalPoly::is_polynomial)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(RationalPoly::is_zero)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &RationalPoly) {
        for v in self.row_mut(i) {
            *v = &*v * c;
        }
    }

    /// Row `i` becomes row `i` plus `c` times row `j`.
    pub fn add_row_multiple(&mut self, i: usize, j: usize, c: &RationalPoly) {
        if c.is_zero() {
            return;
        }
        for col in 0..self.cols {
            let term = self.get(j, col) * c;
            if !term.is_zero() {
                let v = self.get(i, col) + &term;
                self.set(i, col, v);
            }
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Entrywise `D -> D^-1`.
    pub fn time_reverse(&self) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(RationalPoly::time_reverse).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Columns `start..end` as a new matrix.
    pub fn columns(&self, start: usize, end: usize) -> Self {
        let mut m = Self::zeros(self.rows, end - start);
        for i in 0..self.rows {
            for j in start..end {
                m.set(i, j - start, self.get(i, j).clone());
            }
        }
        m
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_range(&self, start: usize, end: usize) -> Self {
        PolyMatrix {
            rows: end - start,
            cols: self.cols,
            entries: self.entries[start * self.cols..end * self.cols].to_vec(),
        }
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot place {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns over {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(PolyMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Reduced row-echelon form over the rational-function field and the
    /// rank. Pivots are taken in the leftmost column, lowest row first, and
    /// normalized to 1.
    pub fn rref(&self) -> (Self, usize) {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(piv) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, piv);
            let inv = m.get(rank, col).inverse().expect("pivot is nonzero");
            m.scale_row(rank, &inv);
            for r in 0..m.rows {
                if r != rank {
                    let f = m.get(r, col).clone();
                    m.add_row_multiple(r, rank, &f);
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Equal row spaces over the rational-function field.
    pub fn row_space_equal(&self, other: &Self) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let (a, ra) = self.rref();
        let (b, rb) = other.rref();
        ra == rb && a.row_range(0, ra) == b.row_range(0, rb)
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Self) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let r = self.rank();
        self.vstack(other).map(|m| m.rank() == r).unwrap_or(false)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n)).ok()?;
        let (red, _) = aug.rref();
        if red.columns(0, n) != Self::identity(n) {
            return None;
        }
        Some(red.columns(n, 2 * n))
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;

    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.matmul(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[i64]) -> RationalPoly {
        LaurentPoly::from_exponents(exps.iter().copied()).into()
    }

    fn z() -> RationalPoly {
        RationalPoly::zero()
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = PolyMatrix::identity(3);
        assert_eq!(id.rref(), (id.clone(), 3));
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        let m = PolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[1, 2]), p(&[2])]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn unit_scaling_preserves_row_space() {
        let a = PolyMatrix::from_rows(vec![vec![p(&[0, 1]), z()]]).unwrap();
        let b = PolyMatrix::from_rows(vec![vec![p(&[0]), z()]]).unwrap();
        assert!(a.row_space_equal(&b));
    }

    #[test]
    fn swapped_rows_span_the_same_space() {
        let m = PolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[1]), z()], vec![z(), p(&[-1]), p(&[0, 3])]]).unwrap();
        let mut s = m.clone();
        s.swap_rows(0, 1);
        assert!(m.row_space_equal(&s));
    }

    #[test]
    fn inverse_round_trip() {
        let m = PolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[0]), p(&[0, 2])]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, PolyMatrix::identity(2));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        assert!(PolyMatrix::from_rows(vec![vec![z()], vec![z(), z()]]).is_err());
    }
}
