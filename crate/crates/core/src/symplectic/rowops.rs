//! Replayable row operations: premultiplication by an invertible `R(D)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pauli::CheckMatrix;
use crate::poly::{PolyMatrix, RationalPoly, Scanner};

/// A single elementary row operation. Indices are 0-based in memory and
/// 1-based in text.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RowOp {
    Swap(usize, usize),
    /// Row `i` times a nonzero `c`.
    Scale(usize, RationalPoly),
    /// Row `target` plus `c` times row `source`.
    AddMultiple {
        target: usize,
        source: usize,
        c: RationalPoly,
    },
}

impl RowOp {
    fn check(&self, rows: usize) -> Result<()> {
        let idx = match self {
            RowOp::Swap(i, j) => vec![*i, *j],
            RowOp::Scale(i, c) => {
                if c.is_zero() {
                    return Err(Error::ZeroScale);
                }
                vec![*i]
            }
            RowOp::AddMultiple { target, source, .. } => {
                if target == source {
                    return Err(Error::DimensionMismatch(format!(
                        "row {} cannot absorb a multiple of itself",
                        target + 1
                    )));
                }
                vec![*target, *source]
            }
        };
        match idx.into_iter().find(|&i| i >= rows) {
            Some(index) => Err(Error::IndexOutOfRange { index, size: rows }),
            None => Ok(()),
        }
    }

    fn apply_unchecked(&self, h: &mut CheckMatrix) {
        match self {
            RowOp::Swap(i, j) => h.swap_rows(*i, *j),
            RowOp::Scale(i, c) => h.scale_row(*i, c),
            RowOp::AddMultiple { target, source, c } => h.add_row_multiple(*target, *source, c),
        }
    }
}

impl fmt::Display for RowOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowOp::Swap(i, j) => write!(f, "swap {} {}", i + 1, j + 1),
            RowOp::Scale(i, c) => write!(f, "scale {} ({})", i + 1, c),
            RowOp::AddMultiple { target, source, c } => {
                write!(f, "add {} {} ({})", target + 1, source + 1, c)
            }
        }
    }
}

fn index(word: Option<&str>, line: &str) -> Result<usize> {
    let w = word.ok_or_else(|| Error::parse(1, line.len() + 1, "expected a row index"))?;
    let col = w.as_ptr() as usize - line.as_ptr() as usize + 1;
    match w.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i - 1),
        _ => Err(Error::parse(1, col, format!("invalid row index '{w}'"))),
    }
}

fn next_word<'a>(rest: &mut &'a str) -> Option<&'a str> {
    let t = rest.trim_start();
    if t.is_empty() {
        return None;
    }
    let end = t.find(char::is_whitespace).unwrap_or(t.len());
    let (w, r) = t.split_at(end);
    *rest = r;
    Some(w)
}

fn coefficient(rest: &str, line: &str) -> Result<RationalPoly> {
    let offset = rest.as_ptr() as usize - line.as_ptr() as usize;
    let mut sc = Scanner::new(rest);
    sc.expect('(').map_err(|e| e.at_line(1, offset))?;
    // Accept `(poly)` and `((num)/(den))`.
    let v = sc.rational().map_err(|e| e.at_line(1, offset))?;
    sc.expect(')').map_err(|e| e.at_line(1, offset))?;
    sc.finish().map_err(|e| e.at_line(1, offset))?;
    Ok(v)
}

impl FromStr for RowOp {
    type Err = Error;

    /// `swap i j` | `scale i (c)` | `add i j (c)`.
    fn from_str(line: &str) -> Result<Self> {
        let trimmed = line.trim_start();
        let mut parts = trimmed.splitn(2, char::is_whitespace);
        let kw = parts.next().unwrap_or("");
        let mut rest = parts.next().unwrap_or("");
        let op = match kw {
            "swap" => {
                let i = index(next_word(&mut rest), line)?;
                let j = index(next_word(&mut rest), line)?;
                if !rest.trim().is_empty() {
                    return Err(Error::parse(
                        1,
                        line.len() - rest.len() + 1,
                        "unexpected trailing input",
                    ));
                }
                RowOp::Swap(i, j)
            }
            "scale" => {
                let i = index(next_word(&mut rest), line)?;
                RowOp::Scale(i, coefficient(rest, line)?)
            }
            "add" => {
                let target = index(next_word(&mut rest), line)?;
                let source = index(next_word(&mut rest), line)?;
                RowOp::AddMultiple {
                    target,
                    source,
                    c: coefficient(rest, line)?,
                }
            }
            other => {
                let col = line.len() - trimmed.len() + 1;
                return Err(Error::parse(1, col, format!("unknown row operation '{other}'")));
            }
        };
        Ok(op)
    }
}

/// Ordered list of row operations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RowOpRecord(Vec<RowOp>);

impl RowOpRecord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, op: RowOp) {
        self.0.push(op);
    }

    pub fn ops(&self) -> &[RowOp] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn extend(&mut self, other: &RowOpRecord) {
        self.0.extend(other.0.iter().cloned());
    }

    /// The `rows x rows` matrix `R(D)` such that replaying the record equals
    /// premultiplication by `R(D)`.
    pub fn as_matrix(&self, rows: usize) -> Result<PolyMatrix> {
        let mut r = PolyMatrix::identity(rows);
        for op in &self.0 {
            op.check(rows)?;
            match op {
                RowOp::Swap(i, j) => r.swap_rows(*i, *j),
                RowOp::Scale(i, c) => r.scale_row(*i, c),
                RowOp::AddMultiple { target, source, c } => r.add_row_multiple(*target, *source, c),
            }
        }
        Ok(r)
    }
}

impl FromIterator<RowOp> for RowOpRecord {
    fn from_iter<T: IntoIterator<Item = RowOp>>(iter: T) -> Self {
        RowOpRecord(iter.into_iter().collect())
    }
}

impl fmt::Display for RowOpRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.0 {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

/// Replays `record` on `h`.
pub fn apply_row_ops(h: &CheckMatrix, record: &RowOpRecord) -> Result<CheckMatrix> {
    let mut out = h.clone();
    for op in record.ops() {
        op.check(h.r())?;
        op.apply_unchecked(&mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_rational;

    #[test]
    fn text_round_trip() {
        for s in ["swap 2 3", "scale 4 ((1)/(1+D+D^2))", "add 3 1 (D^-1+1)"] {
            let op: RowOp = s.parse().unwrap();
            assert_eq!(op.to_string(), s);
        }
        let op: RowOp = "add 4 2 (1+D)".parse().unwrap();
        assert_eq!(
            op,
            RowOp::AddMultiple {
                target: 3,
                source: 1,
                c: parse_rational("1+D").unwrap()
            }
        );
    }

    #[test]
    fn malformed_ops_are_rejected() {
        assert!("swap 0 1".parse::<RowOp>().is_err());
        assert!("scale 1 1+D".parse::<RowOp>().is_err());
        assert!("twist 1 2".parse::<RowOp>().is_err());
        assert!("swap 1".parse::<RowOp>().is_err());
    }

    #[test]
    fn zero_scale_and_range_errors() {
        let h = CheckMatrix::zeros(2, 1);
        let rec: RowOpRecord = [RowOp::Scale(0, RationalPoly::zero())].into_iter().collect();
        assert_eq!(apply_row_ops(&h, &rec), Err(Error::ZeroScale));
        let rec: RowOpRecord = [RowOp::Swap(0, 5)].into_iter().collect();
        assert_eq!(
            apply_row_ops(&h, &rec),
            Err(Error::IndexOutOfRange { index: 5, size: 2 })
        );
    }
}
