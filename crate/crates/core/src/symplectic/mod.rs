//! Shifted symplectic products, the product matrix `Ω(D)`, row operations
//! and `l`-expansion.

mod expand;
mod rowops;

use std::fmt;

pub use expand::{expand, expanded_omega};
pub use rowops::{apply_row_ops, RowOp, RowOpRecord};

use crate::error::{Error, Result};
use crate::pauli::CheckMatrix;
use crate::poly::{parse_rational, PolyMatrix, RationalPoly};
use crate::text::{content_lines, header_fields, split_with_offsets};

/// `Σ_q z1_q(D)·x2_q(D^-1) + x1_q(D)·z2_q(D^-1)`. The coefficient of `D^m`
/// is the commutation parity of the first generator against the second
/// shifted by `m` frames.
pub fn shifted_symplectic_product(
    z1: &[RationalPoly],
    x1: &[RationalPoly],
    z2: &[RationalPoly],
    x2: &[RationalPoly],
) -> RationalPoly {
    let mut acc = RationalPoly::zero();
    for q in 0..z1.len() {
        if !z1[q].is_zero() && !x2[q].is_zero() {
            acc += &(&z1[q] * &x2[q].time_reverse());
        }
        if !x1[q].is_zero() && !z2[q].is_zero() {
            acc += &(&x1[q] * &z2[q].time_reverse());
        }
    }
    acc
}

/// `(h_i ⊙ g_j)(D)` for row `i` of `h` and row `j` of `g`.
pub fn row_product(h: &CheckMatrix, i: usize, g: &CheckMatrix, j: usize) -> RationalPoly {
    shifted_symplectic_product(h.z_row(i), h.x_row(i), g.z_row(j), g.x_row(j))
}

/// Square matrix of pairwise shifted symplectic products.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OmegaMatrix(PolyMatrix);

impl OmegaMatrix {
    /// Wraps a square matrix; symmetry is not checked here.
    pub fn from_matrix(m: PolyMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch(format!(
                "a product matrix must be square, found {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(OmegaMatrix(m))
    }

    /// `⊕^c J ⊕ 0_a` with `J = [[0, 1], [1, 0]]`.
    pub fn standard(c: usize, a: usize) -> Self {
        let mut m = PolyMatrix::zeros(2 * c + a, 2 * c + a);
        for p in 0..c {
            m.set(2 * p, 2 * p + 1, RationalPoly::one());
            m.set(2 * p + 1, 2 * p, RationalPoly::one());
        }
        OmegaMatrix(m)
    }

    /// `omega size=<r>` followed by one bracketed row per line.
    pub fn to_text(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            out.push_str(&format!("# {c}\n"));
        }
        out.push_str(&format!("omega size={}\n{}", self.size(), self.0));
        out
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = content_lines(src);
        let Some((hline, header)) = lines.next() else {
            return Err(Error::EmptyInput);
        };
        let r = header_fields(header, hline, Some("omega"), &["size"])?[0];
        let mut m = PolyMatrix::zeros(r, r);
        let mut last = hline;
        for i in 0..r {
            let Some((line_no, line)) = lines.next() else {
                return Err(Error::parse(last + 1, 1, format!("expected {r} rows, found {i}")));
            };
            last = line_no;
            let t = line.trim_end();
            let lead = t.len() - t.trim_start().len();
            let Some(body) = t.trim_start().strip_prefix('[').and_then(|b| b.strip_suffix(']')) else {
                return Err(Error::parse(line_no, lead + 1, "expected '[e1, e2, ...]'"));
            };
            let fields = split_with_offsets(body, ',');
            if fields.len() != r {
                return Err(Error::parse(
                    line_no,
                    lead + 2,
                    format!("expected {r} entries, found {}", fields.len()),
                ));
            }
            for (j, (off, f)) in fields.into_iter().enumerate() {
                m.set(i, j, parse_rational(f).map_err(|e| e.at_line(line_no, lead + 1 + off))?);
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, 1, "unexpected line after the last row"));
        }
        OmegaMatrix::from_matrix(m)
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalPoly {
        self.0.get(i, j)
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `Ω(D) = Ωᵀ(D^-1)`.
    pub fn is_symmetric(&self) -> bool {
        self.0 == self.0.transpose().time_reverse()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }
}

impl fmt::Display for OmegaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for OmegaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OmegaMatrix\n{}", self.0)
    }
}

/// `Ω(D) = Z(D)Xᵀ(D^-1) + X(D)Zᵀ(D^-1)`.
pub fn omega_matrix(h: &CheckMatrix) -> OmegaMatrix {
    let r = h.r();
    let mut m = PolyMatrix::zeros(r, r);
    for i in 0..r {
        for j in i..r {
            let v = row_product(h, i, h, j);
            if i != j {
                m.set(j, i, v.time_reverse());
            }
            m.set(i, j, v);
        }
    }
    OmegaMatrix(m)
}

/// Products of every row of `a` against every row of `b`.
pub fn cross_products(a: &CheckMatrix, b: &CheckMatrix) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(a.r(), b.r());
    for i in 0..a.r() {
        for j in 0..b.r() {
            m.set(i, j, row_product(a, i, b, j));
        }
    }
    m
}
