//! Quantum check matrices `[Z(D) | X(D)]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{PolyMatrix, RationalPoly, Scanner};
use crate::text::{content_lines, header_fields, split_with_offsets};

/// `r` generators on `n` qubits per frame; row `i` is `[z_i(D) | x_i(D)]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CheckMatrix {
    z: PolyMatrix,
    x: PolyMatrix,
}

impl CheckMatrix {
    pub fn new(z: PolyMatrix, x: PolyMatrix) -> Result<Self> {
        if z.rows() != x.rows() || z.cols() != x.cols() {
            return Err(Error::DimensionMismatch(format!(
                "Z block is {}x{} but X block is {}x{}",
                z.rows(),
                z.cols(),
                x.rows(),
                x.cols()
            )));
        }
        Ok(CheckMatrix { z, x })
    }

    pub fn zeros(r: usize, n: usize) -> Self {
        CheckMatrix {
            z: PolyMatrix::zeros(r, n),
            x: PolyMatrix::zeros(r, n),
        }
    }

    /// Splits a `r x 2n` matrix into its Z and X halves.
    pub fn from_full(m: &PolyMatrix) -> Result<Self> {
        if !m.cols().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(format!(
                "a check matrix needs an even column count, found {}",
                m.cols()
            )));
        }
        let n = m.cols() / 2;
        Self::new(m.columns(0, n), m.columns(n, 2 * n))
    }

    /// Frame size.
    pub fn n(&self) -> usize {
        self.z.cols()
    }

    /// Generator count.
    pub fn r(&self) -> usize {
        self.z.rows()
    }

    pub fn z(&self) -> &PolyMatrix {
        &self.z
    }

    pub fn x(&self) -> &PolyMatrix {
        &self.x
    }

    pub fn z_at(&self, i: usize, q: usize) -> &RationalPoly {
        self.z.get(i, q)
    }

    pub fn x_at(&self, i: usize, q: usize) -> &RationalPoly {
        self.x.get(i, q)
    }

    pub fn set_z(&mut self, i: usize, q: usize, v: RationalPoly) {
        self.z.set(i, q, v);
    }

    pub fn set_x(&mut self, i: usize, q: usize, v: RationalPoly) {
        self.x.set(i, q, v);
    }

    pub fn z_row(&self, i: usize) -> &[RationalPoly] {
        self.z.row(i)
    }

    pub fn x_row(&self, i: usize) -> &[RationalPoly] {
        self.x.row(i)
    }

    pub fn full(&self) -> PolyMatrix {
        self.z.hstack(&self.x).expect("blocks have equal row counts")
    }

    pub fn is_polynomial(&self) -> bool {
        self.z.is_polynomial() && self.x.is_polynomial()
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.z.row_is_zero(i) && self.x.row_is_zero(i)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        self.z.swap_rows(i, j);
        self.x.swap_rows(i, j);
    }

    pub fn scale_row(&mut self, i: usize, c: &RationalPoly) {
        self.z.scale_row(i, c);
        self.x.scale_row(i, c);
    }

    /// Row `i` becomes row `i` plus `c` times row `j`.
    pub fn add_row_multiple(&mut self, i: usize, j: usize, c: &RationalPoly) {
        self.z.add_row_multiple(i, j, c);
        self.x.add_row_multiple(i, j, c);
    }

    pub fn row_range(&self, start: usize, end: usize) -> Self {
        CheckMatrix {
            z: self.z.row_range(start, end),
            x: self.x.row_range(start, end),
        }
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        Self::new(self.z.vstack(&other.z)?, self.x.vstack(&other.x)?)
    }

    /// Columns `start..end` of both halves.
    pub fn qubits(&self, start: usize, end: usize) -> Self {
        CheckMatrix {
            z: self.z.columns(start, end),
            x: self.x.columns(start, end),
        }
    }

    /// Places `self`'s qubits before `other`'s; row counts must agree.
    pub fn hstack_qubits(&self, other: &Self) -> Result<Self> {
        Self::new(self.z.hstack(&other.z)?, self.x.hstack(&other.x)?)
    }

    /// Equal row spaces over the rational-function field.
    pub fn row_space_equal(&self, other: &Self) -> bool {
        self.n() == other.n() && self.full().row_space_equal(&other.full())
    }

    /// Serializes in the check matrix text format, preceded by `comments`
    /// as `#` lines.
    pub fn to_text(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            out.push_str(&format!("# {c}\n"));
        }
        out.push_str(&self.body_text());
        out
    }

    pub(crate) fn body_text(&self) -> String {
        let mut out = format!("frames={} generators={}\n", self.n(), self.r());
        for i in 0..self.r() {
            out.push_str(&format!("z: {} | x: {}\n", join(self.z_row(i)), join(self.x_row(i))));
        }
        out
    }

    /// Parses the check matrix text format.
    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = content_lines(src);
        let (m, _) = Self::parse_lines(&mut lines, None)?;
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, 1, "unexpected line after the last generator"));
        }
        Ok(m)
    }

    /// Parses a header and its generator lines from `lines`, leaving any
    /// further lines unread. Returns the matrix and the last line number.
    pub(crate) fn parse_lines<'a>(
        lines: &mut impl Iterator<Item = (usize, &'a str)>,
        first: Option<(usize, &'a str)>,
    ) -> Result<(Self, usize)> {
        let Some((hline, header)) = first.or_else(|| lines.next()) else {
            return Err(Error::EmptyInput);
        };
        let dims = header_fields(header, hline, None, &["frames", "generators"])?;
        let (n, r) = (dims[0], dims[1]);
        if r == 0 {
            return Err(Error::EmptyInput);
        }
        let mut z = PolyMatrix::zeros(r, n);
        let mut x = PolyMatrix::zeros(r, n);
        let mut last = hline;
        for i in 0..r {
            let Some((line_no, line)) = lines.next() else {
                return Err(Error::parse(
                    last + 1,
                    1,
                    format!("expected {r} generator lines, found {i}"),
                ));
            };
            last = line_no;
            let (zs, xs) = parse_row(line, line_no, n)?;
            for (q, (zv, xv)) in zs.into_iter().zip(xs).enumerate() {
                z.set(i, q, zv);
                x.set(i, q, xv);
            }
        }
        Ok((CheckMatrix { z, x }, last))
    }
}

fn join(row: &[RationalPoly]) -> String {
    row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

type RowEntries = (Vec<RationalPoly>, Vec<RationalPoly>);

fn parse_row(line: &str, line_no: usize, n: usize) -> Result<RowEntries> {
    let halves = split_with_offsets(line, '|');
    if halves.len() != 2 {
        return Err(Error::parse(line_no, 1, "expected 'z: ... | x: ...'"));
    }
    let z = parse_half(halves[0], "z:", line_no, n)?;
    let x = parse_half(halves[1], "x:", line_no, n)?;
    Ok((z, x))
}

fn parse_half((offset, s): (usize, &str), tag: &str, line_no: usize, n: usize) -> Result<Vec<RationalPoly>> {
    let lead = s.len() - s.trim_start().len();
    let Some(rest) = s.trim_start().strip_prefix(tag) else {
        return Err(Error::parse(line_no, offset + lead + 1, format!("expected '{tag}'")));
    };
    let base = offset + lead + tag.len();
    let fields = split_with_offsets(rest, ',');
    if fields.len() != n {
        return Err(Error::parse(
            line_no,
            base + 1,
            format!("expected {n} entries, found {}", fields.len()),
        ));
    }
    fields
        .into_iter()
        .map(|(off, f)| {
            let mut sc = Scanner::new(f);
            sc.rational()
                .and_then(|v| sc.finish().map(|_| v))
                .map_err(|e| e.at_line(line_no, base + off))
        })
        .collect()
}

impl fmt::Display for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.r() {
            writeln!(f, "[{} | {}]", join(self.z_row(i)), join(self.x_row(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CheckMatrix r={} n={}", self.r(), self.n())?;
        fmt::Display::fmt(self, f)
    }
}
