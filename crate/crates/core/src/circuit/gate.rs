//! Shift-invariant Clifford gates acting on check-matrix columns.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pauli::CheckMatrix;
use crate::poly::{LaurentPoly, RationalPoly, Scanner};
use crate::symplectic::cross_products;

/// A qubit of every frame: the sender's qubit `i` or the receiver's ebit
/// half `i` (both 0-based; text uses `i+1` and `B{i+1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Qubit {
    Sender(usize),
    Receiver(usize),
}

impl Qubit {
    /// Column in a tableau whose first `receivers` columns are the receiver's.
    pub fn column(self, receivers: usize) -> usize {
        match self {
            Qubit::Receiver(i) => i,
            Qubit::Sender(i) => receivers + i,
        }
    }

    pub fn is_receiver(self) -> bool {
        matches!(self, Qubit::Receiver(_))
    }

    fn offset(self, by: usize) -> Self {
        match self {
            Qubit::Sender(i) => Qubit::Sender(i + by),
            r => r,
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Qubit::Sender(i) => write!(f, "{}", i + 1),
            Qubit::Receiver(i) => write!(f, "B{}", i + 1),
        }
    }
}

impl FromStr for Qubit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (recv, digits) = match s.strip_prefix('B') {
            Some(d) => (true, d),
            None => (false, s),
        };
        match digits.parse::<usize>() {
            Ok(i) if i >= 1 && recv => Ok(Qubit::Receiver(i - 1)),
            Ok(i) if i >= 1 => Ok(Qubit::Sender(i - 1)),
            _ => Err(Error::parse(1, 1, format!("invalid qubit '{s}'"))),
        }
    }
}

/// Gate action on every row `[z | x]`:
///
/// - `Cnot`: `x_dst += f·x_src`, `z_src += f(D^-1)·z_dst`.
/// - `H`: swap `z_q` and `x_q`.
/// - `P`: `z_q += x_q`.
/// - `Cz`: `z_a += x_b`, `z_b += x_a`.
/// - `Icnot`: `x_q ← g·x_q`, `z_q ← z_q / g(D^-1)`; infinite depth unless
///   `g` is a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    Cnot { src: Qubit, dst: Qubit, f: LaurentPoly },
    H(Qubit),
    P(Qubit),
    Cz(Qubit, Qubit),
    Icnot { q: Qubit, g: RationalPoly },
}

impl Gate {
    pub fn cnot(src: Qubit, dst: Qubit, f: LaurentPoly) -> Result<Self> {
        if src == dst {
            return Err(Error::DimensionMismatch(format!("CNOT from {src} onto itself")));
        }
        if f.is_zero() {
            return Err(Error::DimensionMismatch(format!(
                "CNOT {src} {dst} with zero polynomial"
            )));
        }
        Ok(Gate::Cnot { src, dst, f })
    }

    pub fn icnot(q: Qubit, g: RationalPoly) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Gate::Icnot { q, g })
    }

    pub fn qubits(&self) -> Vec<Qubit> {
        match self {
            Gate::Cnot { src, dst, .. } => vec![*src, *dst],
            Gate::H(q) | Gate::P(q) | Gate::Icnot { q, .. } => vec![*q],
            Gate::Cz(a, b) => vec![*a, *b],
        }
    }

    pub fn is_infinite_depth(&self) -> bool {
        matches!(self, Gate::Icnot { g, .. } if g.monomial_exponent().is_none())
    }

    /// The same gate with sender qubit indices shifted by `by`.
    pub fn offset(&self, by: usize) -> Self {
        match self {
            Gate::Cnot { src, dst, f } => Gate::Cnot {
                src: src.offset(by),
                dst: dst.offset(by),
                f: f.clone(),
            },
            Gate::H(q) => Gate::H(q.offset(by)),
            Gate::P(q) => Gate::P(q.offset(by)),
            Gate::Cz(a, b) => Gate::Cz(a.offset(by), b.offset(by)),
            Gate::Icnot { q, g } => Gate::Icnot {
                q: q.offset(by),
                g: g.clone(),
            },
        }
    }

    /// The gate with its qubits renumbered as senders `0, 1` of a local
    /// frame.
    fn localized(&self) -> Self {
        let (a, b) = (Qubit::Sender(0), Qubit::Sender(1));
        match self {
            Gate::Cnot { f, .. } => Gate::Cnot {
                src: a,
                dst: b,
                f: f.clone(),
            },
            Gate::H(_) => Gate::H(a),
            Gate::P(_) => Gate::P(a),
            Gate::Cz(..) => Gate::Cz(a, b),
            Gate::Icnot { g, .. } => Gate::Icnot { q: a, g: g.clone() },
        }
    }

    /// Whether the gate preserves every shifted symplectic product. Checked
    /// on unit rows of its own qubits, which suffices because products are
    /// sesquilinear and the gate acts column-locally.
    pub fn preserves_products(&self) -> bool {
        let gate = self.localized();
        let w = gate.qubits().len();
        let mut probe = CheckMatrix::zeros(2 * w, w);
        for q in 0..w {
            probe.set_z(2 * q, q, RationalPoly::one());
            probe.set_x(2 * q + 1, q, RationalPoly::one());
        }
        let before = cross_products(&probe, &probe);
        gate.apply(&mut probe, 0).is_ok() && cross_products(&probe, &probe) == before
    }

    /// The inverse gate. Every gate but `Icnot` is an involution here.
    pub fn inverse(&self) -> Self {
        match self {
            Gate::Icnot { q, g } => Gate::Icnot {
                q: *q,
                g: g.inverse().expect("gate polynomial is nonzero"),
            },
            other => other.clone(),
        }
    }

    fn check(&self, receivers: usize, senders: usize) -> Result<()> {
        for q in self.qubits() {
            let (i, size) = match q {
                Qubit::Receiver(i) => (i, receivers),
                Qubit::Sender(i) => (i, senders),
            };
            if i >= size {
                return Err(Error::IndexOutOfRange { index: i, size });
            }
        }
        Ok(())
    }

    /// Applies the gate to every row of `m`, whose first `receivers` columns
    /// belong to the receiver.
    pub fn apply(&self, m: &mut CheckMatrix, receivers: usize) -> Result<()> {
        if m.n() < receivers {
            return Err(Error::DimensionMismatch(format!(
                "{receivers} receiver columns in a {}-column tableau",
                m.n()
            )));
        }
        self.check(receivers, m.n() - receivers)?;
        let col = |q: Qubit| q.column(receivers);
        for row in 0..m.r() {
            match self {
                Gate::Cnot { src, dst, f } => {
                    let (s, d) = (col(*src), col(*dst));
                    let fr = RationalPoly::from(f.clone());
                    let xs = m.x_at(row, s).clone();
                    if !xs.is_zero() {
                        let v = m.x_at(row, d) + &(&fr * &xs);
                        m.set_x(row, d, v);
                    }
                    let zd = m.z_at(row, d).clone();
                    if !zd.is_zero() {
                        let v = m.z_at(row, s) + &(&fr.time_reverse() * &zd);
                        m.set_z(row, s, v);
                    }
                }
                Gate::H(q) => {
                    let c = col(*q);
                    let z = m.z_at(row, c).clone();
                    let x = m.x_at(row, c).clone();
                    m.set_z(row, c, x);
                    m.set_x(row, c, z);
                }
                Gate::P(q) => {
                    let c = col(*q);
                    let v = m.z_at(row, c) + m.x_at(row, c);
                    m.set_z(row, c, v);
                }
                Gate::Cz(a, b) => {
                    let (ca, cb) = (col(*a), col(*b));
                    let xa = m.x_at(row, ca).clone();
                    let xb = m.x_at(row, cb).clone();
                    let za = m.z_at(row, ca) + &xb;
                    let zb = m.z_at(row, cb) + &xa;
                    m.set_z(row, ca, za);
                    m.set_z(row, cb, zb);
                }
                Gate::Icnot { q, g } => {
                    let c = col(*q);
                    let x = m.x_at(row, c) * g;
                    let z = m.z_at(row, c).div(&g.time_reverse())?;
                    m.set_x(row, c, x);
                    m.set_z(row, c, z);
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot { src, dst, f: p } => write!(f, "CNOT {src} {dst} {p}"),
            Gate::H(q) => write!(f, "H {q}"),
            Gate::P(q) => write!(f, "P {q}"),
            Gate::Cz(a, b) => write!(f, "CZ {a} {b}"),
            Gate::Icnot { q, g } => write!(f, "ICNOT {q} ({})/({})", g.num(), g.den()),
        }
    }
}

fn qubit_at(word: Option<&str>, line: &str) -> Result<Qubit> {
    let w = word.ok_or_else(|| Error::parse(1, line.len() + 1, "expected a qubit"))?;
    let col = w.as_ptr() as usize - line.as_ptr() as usize + 1;
    w.parse().map_err(|e: Error| e.at_line(1, col - 1))
}

fn qubit_range(w: &str, line: &str) -> Result<Vec<Qubit>> {
    let col = w.as_ptr() as usize - line.as_ptr() as usize;
    let Some((a, b)) = w.split_once("..") else {
        return Ok(vec![qubit_at(Some(w), line)?]);
    };
    let a: Qubit = a.parse().map_err(|e: Error| e.at_line(1, col))?;
    let b: Qubit = b.parse().map_err(|e: Error| e.at_line(1, col))?;
    match (a, b) {
        (Qubit::Sender(i), Qubit::Sender(j)) if i <= j => Ok((i..=j).map(Qubit::Sender).collect()),
        (Qubit::Receiver(i), Qubit::Receiver(j)) if i <= j => Ok((i..=j).map(Qubit::Receiver).collect()),
        _ => Err(Error::parse(1, col + 1, format!("invalid qubit range '{w}'"))),
    }
}

/// Parses one gate line. `H a..b` and `SWAP a b` expand to several gates.
pub fn parse_gate_line(line: &str) -> Result<Vec<Gate>> {
    let trimmed = line.trim_start();
    let kw_end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
    let kw = &trimmed[..kw_end];
    let rest = &trimmed[kw_end..];
    let mut words = rest.split_whitespace();
    let kw_col = line.len() - trimmed.len() + 1;
    let arg_end = |args: usize| -> usize {
        // Byte offset just past the `args`-th argument word.
        let mut consumed = kw_end;
        let mut r = rest;
        for _ in 0..args {
            let t = r.trim_start();
            consumed += r.len() - t.len();
            let e = t.find(char::is_whitespace).unwrap_or(t.len());
            consumed += e;
            r = &t[e..];
        }
        line.len() - trimmed.len() + consumed
    };
    let gates = match kw {
        "CNOT" => {
            let src = qubit_at(words.next(), line)?;
            let dst = qubit_at(words.next(), line)?;
            let off = arg_end(2);
            let mut sc = Scanner::new(&line[off..]);
            let f = sc.poly().map_err(|e| e.at_line(1, off))?;
            sc.finish().map_err(|e| e.at_line(1, off))?;
            vec![Gate::cnot(src, dst, f).map_err(|e| Error::parse(1, kw_col, e.to_string()))?]
        }
        "SWAP" => {
            let a = qubit_at(words.next(), line)?;
            let b = qubit_at(words.next(), line)?;
            let one = LaurentPoly::one();
            let mk = |s, d| Gate::cnot(s, d, one.clone());
            vec![mk(a, b), mk(b, a), mk(a, b)]
                .into_iter()
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::parse(1, kw_col, e.to_string()))?
        }
        "H" => {
            let w = words
                .next()
                .ok_or_else(|| Error::parse(1, line.len() + 1, "expected a qubit"))?;
            qubit_range(w, line)?.into_iter().map(Gate::H).collect()
        }
        "P" => vec![Gate::P(qubit_at(words.next(), line)?)],
        "CZ" => {
            let a = qubit_at(words.next(), line)?;
            let b = qubit_at(words.next(), line)?;
            if a == b {
                return Err(Error::parse(1, kw_col, "CZ needs two distinct qubits"));
            }
            vec![Gate::Cz(a, b)]
        }
        "ICNOT" => {
            let q = qubit_at(words.next(), line)?;
            let off = arg_end(1);
            let mut sc = Scanner::new(&line[off..]);
            let g = sc.rational().map_err(|e| e.at_line(1, off))?;
            sc.finish().map_err(|e| e.at_line(1, off))?;
            vec![Gate::icnot(q, g).map_err(|e| Error::parse(1, kw_col, e.to_string()))?]
        }
        other => {
            return Err(Error::parse(1, kw_col, format!("unknown gate '{other}'")));
        }
    };
    if !matches!(kw, "CNOT" | "ICNOT") && words.next().is_some() {
        return Err(Error::parse(1, arg_end(gate_args(kw)) + 1, "unexpected trailing input"));
    }
    Ok(gates)
}

fn gate_args(kw: &str) -> usize {
    match kw {
        "H" | "P" => 1,
        _ => 2,
    }
}
