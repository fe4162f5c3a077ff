//! Finite-weight Pauli sequences and their binary polynomial images.

use std::fmt;
use std::str::FromStr;

use super::CheckMatrix;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, PolyMatrix};
use crate::text::content_lines;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// `(z, x)` bits.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (false, true),
            Pauli::Y => (true, true),
            Pauli::Z => (true, false),
        }
    }

    pub fn from_bits(z: bool, x: bool) -> Self {
        match (z, x) {
            (false, false) => Pauli::I,
            (false, true) => Pauli::X,
            (true, true) => Pauli::Y,
            (true, false) => Pauli::Z,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    /// True when the two single-qubit operators anticommute.
    pub fn anticommutes(self, other: Pauli) -> bool {
        let (z1, x1) = self.bits();
        let (z2, x2) = other.bits();
        (z1 & x2) ^ (x1 & z2)
    }
}

/// A generator as consecutive frames of `frame_size` letters; frames outside
/// the stored range are identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliFrameSeq {
    frame_size: usize,
    frames: Vec<Vec<Pauli>>,
    start_offset: i64,
}

impl PauliFrameSeq {
    pub fn new(frame_size: usize, frames: Vec<Vec<Pauli>>, start_offset: i64) -> Result<Self> {
        if let Some(f) = frames.iter().find(|f| f.len() != frame_size) {
            return Err(Error::InconsistentFrameSize {
                expected: frame_size,
                found: f.len(),
            });
        }
        Ok(PauliFrameSeq {
            frame_size,
            frames,
            start_offset,
        })
    }

    pub fn frame_size(&self) -> usize {
        self.frame_size
    }

    pub fn frames(&self) -> &[Vec<Pauli>] {
        &self.frames
    }

    pub fn start_offset(&self) -> i64 {
        self.start_offset
    }

    /// Letter on qubit `q` of frame `t`, identity outside the stored range.
    pub fn at(&self, t: i64, q: usize) -> Pauli {
        let i = t - self.start_offset;
        if i < 0 || i as usize >= self.frames.len() {
            Pauli::I
        } else {
            self.frames[i as usize][q]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.frames.iter().flatten().all(|&p| p == Pauli::I)
    }

    /// Drops identity frames at both ends; an identity sequence becomes a
    /// single identity frame at offset 0.
    pub fn trimmed(&self) -> Self {
        let used = |f: &Vec<Pauli>| f.iter().any(|&p| p != Pauli::I);
        let Some(first) = self.frames.iter().position(used) else {
            return PauliFrameSeq {
                frame_size: self.frame_size,
                frames: vec![vec![Pauli::I; self.frame_size]],
                start_offset: 0,
            };
        };
        let last = self.frames.iter().rposition(used).unwrap();
        PauliFrameSeq {
            frame_size: self.frame_size,
            frames: self.frames[first..=last].to_vec(),
            start_offset: self.start_offset + first as i64,
        }
    }
}

impl fmt::Display for PauliFrameSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for frame in &self.frames {
            for p in frame {
                write!(f, "{}", p.letter())?;
            }
            f.write_str("|")?;
        }
        if self.start_offset != 0 {
            write!(f, " @{}", self.start_offset)?;
        }
        Ok(())
    }
}

impl FromStr for PauliFrameSeq {
    type Err = Error;

    /// Parses `|XXX|XZY|` with an optional trailing `@offset`.
    fn from_str(s: &str) -> Result<Self> {
        let (body, offset) = match s.split_once('@') {
            Some((b, o)) => {
                let col = b.chars().count() + 2;
                let off = o
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::parse(1, col, "invalid frame offset"))?;
                (b, off)
            }
            None => (s, 0),
        };
        let lead = body.len() - body.trim_start().len();
        let body = body.trim();
        if !body.starts_with('|') || !body.ends_with('|') || body.len() < 2 {
            return Err(Error::parse(1, lead + 1, "expected frames delimited by '|'"));
        }
        let mut frames = Vec::new();
        let mut col = lead + 2;
        for part in body[1..body.len() - 1].split('|') {
            let mut frame = Vec::new();
            for (i, c) in part.chars().enumerate() {
                frame.push(
                    Pauli::from_letter(c)
                        .ok_or_else(|| Error::parse(1, col + i, format!("expected a Pauli letter, found '{c}'")))?,
                );
            }
            col += part.chars().count() + 1;
            frames.push(frame);
        }
        let n = frames[0].len();
        if n == 0 {
            return Err(Error::parse(1, lead + 2, "empty frame"));
        }
        PauliFrameSeq::new(n, frames, offset)
    }
}

/// Parses one sequence per non-comment line; all must share a frame size.
pub fn parse_pauli_file(src: &str) -> Result<Vec<PauliFrameSeq>> {
    let mut out: Vec<PauliFrameSeq> = Vec::new();
    for (line_no, line) in content_lines(src) {
        let seq: PauliFrameSeq = line.parse().map_err(|e: Error| e.at_line(line_no, 0))?;
        if let Some(first) = out.first() {
            if first.frame_size() != seq.frame_size() {
                return Err(Error::InconsistentFrameSize {
                    expected: first.frame_size(),
                    found: seq.frame_size(),
                });
            }
        }
        out.push(seq);
    }
    if out.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(out)
}

/// Row `i` of the result is generator `i`: an X (Z) on qubit `q` of frame
/// `t` contributes `D^t` to `x_q` (`z_q`); Y contributes to both.
pub fn pauli_to_binary(seqs: &[PauliFrameSeq]) -> Result<CheckMatrix> {
    let Some(first) = seqs.first() else {
        return Err(Error::EmptyInput);
    };
    let n = first.frame_size();
    let mut z = Vec::with_capacity(seqs.len());
    let mut x = Vec::with_capacity(seqs.len());
    for s in seqs {
        if s.frame_size() != n {
            return Err(Error::InconsistentFrameSize {
                expected: n,
                found: s.frame_size(),
            });
        }
        let mut zr = vec![Vec::new(); n];
        let mut xr = vec![Vec::new(); n];
        for (i, frame) in s.frames().iter().enumerate() {
            let t = s.start_offset() + i as i64;
            for (q, p) in frame.iter().enumerate() {
                let (zb, xb) = p.bits();
                if zb {
                    zr[q].push(t);
                }
                if xb {
                    xr[q].push(t);
                }
            }
        }
        z.push(zr.into_iter().map(LaurentPoly::from_exponents).collect());
        x.push(xr.into_iter().map(LaurentPoly::from_exponents).collect());
    }
    CheckMatrix::new(PolyMatrix::from_poly_rows(z)?, PolyMatrix::from_poly_rows(x)?)
}

/// Inverse of [`pauli_to_binary`] on finite-weight rows, producing trimmed
/// sequences.
pub fn binary_to_pauli(h: &CheckMatrix) -> Result<Vec<PauliFrameSeq>> {
    let n = h.n();
    (0..h.r())
        .map(|i| {
            let mut polys = Vec::with_capacity(2 * n);
            for v in h.z_row(i).iter().chain(h.x_row(i)) {
                polys.push(v.as_poly().ok_or(Error::RationalEntry { row: i + 1 })?);
            }
            let lo = polys.iter().filter_map(|p| p.low_exponent()).min();
            let hi = polys.iter().filter_map(|p| p.high_exponent()).max();
            let (Some(lo), Some(hi)) = (lo, hi) else {
                return PauliFrameSeq::new(n, vec![vec![Pauli::I; n]], 0);
            };
            let frames = (lo..=hi)
                .map(|t| {
                    (0..n)
                        .map(|q| Pauli::from_bits(polys[q].coeff(t), polys[n + q].coeff(t)))
                        .collect()
                })
                .collect();
            PauliFrameSeq::new(n, frames, lo)
        })
        .collect()
}
