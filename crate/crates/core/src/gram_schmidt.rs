//! Symplectic Gram-Schmidt over the rational-function field.
//!
//! The driver expands the input by `l = 1, 2, …` and, at each factor, runs
//! the reduction on the expanded matrix until the product matrix is
//! `⊕^c J ⊕ 0_a` or no step applies. Each attempt starts from the original
//! input so the recorded operations replay against `expand(H, l)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::pauli::CheckMatrix;
use crate::poly::{LaurentPoly, RationalPoly};
use crate::symplectic::{apply_row_ops, expand, omega_matrix, row_product, OmegaMatrix, RowOp, RowOpRecord};
use crate::text::content_lines;

pub const DEFAULT_L_MAX: usize = 8;

/// Output of a successful reduction. Rows are ebit pairs first (each pair
/// adjacent), then ancillas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsResult {
    pub h_std: CheckMatrix,
    pub ops: RowOpRecord,
    pub l: usize,
    pub c: usize,
    pub a: usize,
}

impl GsResult {
    /// Frame size of the expanded code.
    pub fn n(&self) -> usize {
        self.h_std.n()
    }

    /// Net information qubits per expanded frame, `n - r`. Zero for codes
    /// with more generators than qubits, which the encoder construction
    /// rejects.
    pub fn k(&self) -> usize {
        self.h_std.n().saturating_sub(self.h_std.r())
    }

    pub fn to_text(&self, comments: &[String]) -> String {
        let mut out = self.h_std.to_text(comments);
        out.push_str("# ops:\n");
        out.push_str(&self.ops.to_string());
        out.push_str(&format!("l={} c={} a={}\n", self.l, self.c, self.a));
        out
    }

    /// Parses the matrix, the op lines and the `l= c= a=` trailer, and checks
    /// that the trailer agrees with the matrix.
    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = content_lines(src);
        let (h_std, mut last) = CheckMatrix::parse_lines(&mut lines, None)?;
        let mut ops = RowOpRecord::new();
        let mut trailer = None;
        for (line_no, line) in lines {
            last = line_no;
            if trailer.is_some() {
                return Err(Error::parse(line_no, 1, "unexpected line after the trailer"));
            }
            if line.trim_start().starts_with("l=") {
                let v = crate::text::header_fields(line, line_no, None, &["l", "c", "a"])?;
                trailer = Some((line_no, v[0], v[1], v[2]));
            } else {
                ops.push(line.parse().map_err(|e: Error| e.at_line(line_no, 0))?);
            }
        }
        let Some((tline, l, c, a)) = trailer else {
            return Err(Error::parse(last + 1, 1, "missing 'l=<l> c=<c> a=<a>' trailer"));
        };
        if 2 * c + a != h_std.r() || l == 0 {
            return Err(Error::parse(
                tline,
                1,
                format!("trailer c={c} a={a} l={l} does not fit {} generators", h_std.r()),
            ));
        }
        Ok(GsResult { h_std, ops, l, c, a })
    }
}

impl fmt::Display for GsResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&[]))
    }
}

/// `Some((c, a))` when `Ω` is exactly `c` diagonal `J` blocks followed by an
/// `a x a` zero block.
pub fn standard_form_check(omega: &OmegaMatrix) -> Option<(usize, usize)> {
    let n = omega.size();
    let mut c = 0;
    while 2 * c + 1 < n && omega.get(2 * c, 2 * c + 1).is_one() {
        c += 1;
    }
    let a = n - 2 * c;
    (*omega == OmegaMatrix::standard(c, a)).then_some((c, a))
}

/// Rank of `Ω` halved and rounded up: the conjectured minimum ebit count.
pub fn ebit_lower_bound(h: &CheckMatrix) -> usize {
    omega_matrix(h).rank().div_ceil(2)
}

/// Scales every row by the least common multiple of its denominators so all
/// entries become polynomial.
pub fn to_finite_weight(h: &CheckMatrix) -> (CheckMatrix, RowOpRecord) {
    let mut ops = RowOpRecord::new();
    for i in 0..h.r() {
        let m = h
            .z_row(i)
            .iter()
            .chain(h.x_row(i))
            .fold(LaurentPoly::one(), |acc, v| acc.lcm(v.den()));
        if !m.is_one() {
            ops.push(RowOp::Scale(i, m.into()));
        }
    }
    let out = apply_row_ops(h, &ops).expect("scale factors are nonzero lcms");
    (out, ops)
}

/// Runs the reduction for `l = 1..=l_max` and returns the first success.
pub fn gram_schmidt(h: &CheckMatrix, l_max: usize) -> Result<GsResult> {
    if h.r() == 0 {
        return Err(Error::EmptyInput);
    }
    if l_max == 0 {
        return Err(Error::DimensionMismatch("l_max must be at least 1".into()));
    }
    for l in 1..=l_max {
        let expanded = expand(h, l)?;
        if let Some(res) = reduce_at(&expanded, l) {
            return Ok(res);
        }
    }
    Err(Error::NoConvergence { l_max })
}

/// Working state: rows `front..back` are unprocessed, rows before `front`
/// are finished pairs and rows from `back` are ancillas.
struct Work {
    h: CheckMatrix,
    ops: RowOpRecord,
    front: usize,
    back: usize,
}

impl Work {
    fn apply(&mut self, op: RowOp) {
        match &op {
            RowOp::Swap(i, j) if i == j => return,
            RowOp::Swap(i, j) => self.h.swap_rows(*i, *j),
            RowOp::Scale(i, c) => self.h.scale_row(*i, c),
            RowOp::AddMultiple { target, source, c } => self.h.add_row_multiple(*target, *source, c),
        }
        self.ops.push(op);
    }

    fn product(&self, i: usize, j: usize) -> RationalPoly {
        row_product(&self.h, i, &self.h, j)
    }

    /// Step 1: a row commuting with every unprocessed row moves to the back.
    fn take_ancilla(&mut self) -> bool {
        let (front, back) = (self.front, self.back);
        let Some(i) = (front..back).find(|&i| (front..back).all(|j| self.product(i, j).is_zero())) else {
            return false;
        };
        self.apply(RowOp::Swap(i, back - 1));
        self.back -= 1;
        true
    }

    /// Steps 2 and 3: pick a pair with isotropic rows and a nonzero product.
    /// Products equal to 1 win, then monomials, then anything nonzero.
    fn find_pair(&self) -> Option<(usize, usize, RationalPoly)> {
        let rows: Vec<usize> = (self.front..self.back)
            .filter(|&i| self.product(i, i).is_zero())
            .collect();
        let mut best: Option<(u8, usize, usize, RationalPoly)> = None;
        for (a, &i) in rows.iter().enumerate() {
            for &j in &rows[a + 1..] {
                let p = self.product(i, j);
                if p.is_zero() {
                    continue;
                }
                let rank = if p.is_one() {
                    0
                } else if p.monomial_exponent().is_some() {
                    1
                } else {
                    2
                };
                if best.as_ref().is_none_or(|b| rank < b.0) {
                    best = Some((rank, i, j, p));
                }
            }
        }
        best.map(|(_, i, j, p)| (i, j, p))
    }

    fn take_pair(&mut self) -> bool {
        let Some((i, mut j, p)) = self.find_pair() else {
            return false;
        };
        let f = self.front;
        self.apply(RowOp::Swap(f, i));
        if j == f {
            j = i;
        }
        self.apply(RowOp::Swap(f + 1, j));
        // h_f ⊙ (c·h_{f+1}) = c(D^-1)·p, so c = 1 / p(D^-1).
        if !p.is_one() {
            let c = match p.monomial_exponent() {
                Some(m) => RationalPoly::monomial(m),
                None => p.time_reverse().inverse().expect("product is nonzero"),
            };
            self.apply(RowOp::Scale(f + 1, c));
        }
        debug_assert!(self.product(f, f + 1).is_one());
        for k in f + 2..self.back {
            let c2 = self.product(k, f + 1);
            if !c2.is_zero() {
                self.apply(RowOp::AddMultiple {
                    target: k,
                    source: f,
                    c: c2,
                });
            }
            let c1 = self.product(k, f);
            if !c1.is_zero() {
                self.apply(RowOp::AddMultiple {
                    target: k,
                    source: f + 1,
                    c: c1,
                });
            }
            debug_assert!(self.product(k, f).is_zero() && self.product(k, f + 1).is_zero());
        }
        self.front += 2;
        true
    }
}

fn reduce_at(expanded: &CheckMatrix, l: usize) -> Option<GsResult> {
    let mut w = Work {
        h: expanded.clone(),
        ops: RowOpRecord::new(),
        front: 0,
        back: expanded.r(),
    };
    while w.front < w.back {
        if !(w.take_ancilla() || w.take_pair()) {
            return None;
        }
    }
    let (c, a) = standard_form_check(&omega_matrix(&w.h))?;
    Some(GsResult {
        h_std: w.h,
        ops: w.ops,
        l,
        c,
        a,
    })
}
