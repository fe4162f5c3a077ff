//! Gate algebra over polynomial stabilizer tableaux, encoder/decoder
//! synthesis and symbolic verification.
//!
//! Tableau columns are the receiver's `c` qubits first, then the sender's
//! `n` qubits. The sender's qubits are laid out as `[ancilla a | ebit c |
//! information k+c]`.

mod gate;
mod rate;
mod reduce;
mod state;
mod synth;
mod verify;

use std::fmt;
use std::str::FromStr;

pub use gate::{parse_gate_line, Gate, Qubit};
pub use rate::{rate_report, RateReport};
pub use reduce::{ancilla_block_reduce, ebit_block_reduce, reduce_isotropic_rows, EbitReduction};
pub use state::{initial_state, StabilizerState};
pub use synth::{synthesize_decoder, synthesize_encoder, EncoderPlan};
pub use verify::{
    augment_receiver, verify_decoder, verify_decoder_report, verify_encoder, verify_encoder_report, DecoderReport,
    EncoderReport,
};

use crate::error::{Error, Result};
use crate::pauli::CheckMatrix;
use crate::text::{content_lines, header_fields};

/// An ordered gate list over frames of `n` sender and `c` receiver qubits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub n: usize,
    pub c: usize,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize, c: usize) -> Self {
        Circuit {
            n,
            c,
            gates: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Appends `gate` after checking its qubits fit the frame.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        for q in gate.qubits() {
            let (i, size) = match q {
                Qubit::Sender(i) => (i, self.n),
                Qubit::Receiver(i) => (i, self.c),
            };
            if i >= size {
                return Err(Error::IndexOutOfRange { index: i, size });
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        gates.into_iter().try_for_each(|g| self.push(g))
    }

    /// The gates undone in reverse order.
    pub fn inverse(&self) -> Self {
        Circuit {
            n: self.n,
            c: self.c,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    /// Drops adjacent pairs of identical self-inverse gates.
    pub fn cancel_adjacent(&mut self) {
        let mut out: Vec<Gate> = Vec::with_capacity(self.gates.len());
        for g in self.gates.drain(..) {
            let involution = !matches!(g, Gate::Icnot { .. });
            if involution && out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        self.gates = out;
    }

    pub fn infinite_depth_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_infinite_depth()).count()
    }

    /// Applies every gate to `m`, whose columns are laid out receiver first.
    pub fn apply_to(&self, m: &mut CheckMatrix) -> Result<()> {
        if m.n() != self.n + self.c {
            return Err(Error::DimensionMismatch(format!(
                "circuit on {}+{} qubits applied to a {}-column tableau",
                self.c,
                self.n,
                m.n()
            )));
        }
        self.gates.iter().try_for_each(|g| g.apply(m, self.c))
    }

    pub fn to_text(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            out.push_str(&format!("# {c}\n"));
        }
        out.push_str(&self.to_string());
        out
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = content_lines(src);
        let Some((hline, header)) = lines.next() else {
            return Err(Error::EmptyInput);
        };
        let dims = header_fields(header, hline, Some("circuit"), &["frames", "receivers"])?;
        let mut circ = Circuit::new(dims[0], dims[1]);
        for (line_no, line) in lines {
            let gates = parse_gate_line(line).map_err(|e| e.at_line(line_no, 0))?;
            circ.extend(gates)
                .map_err(|e| Error::parse(line_no, 1, e.to_string()))?;
        }
        Ok(circ)
    }
}

impl fmt::Display for Circuit {
    /// Header line, then one gate per line; runs of Hadamards on consecutive
    /// sender qubits print as `H a..b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "circuit frames={} receivers={}", self.n, self.c)?;
        let mut i = 0;
        while i < self.gates.len() {
            if let Gate::H(Qubit::Sender(start)) = self.gates[i] {
                let mut end = start;
                while let Some(Gate::H(Qubit::Sender(q))) = self.gates.get(i + 1 + end - start) {
                    if *q != end + 1 {
                        break;
                    }
                    end += 1;
                }
                if end > start {
                    writeln!(f, "H {}..{}", start + 1, end + 1)?;
                    i += end - start + 1;
                    continue;
                }
            }
            writeln!(f, "{}", self.gates[i])?;
            i += 1;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;

    #[test]
    fn text_round_trip_groups_hadamards() {
        let src = "circuit frames=4 receivers=1\nH 2..4\nCNOT B1 1 1+D\nH 1\nH 3\n";
        let circ: Circuit = src.parse().unwrap();
        assert_eq!(circ.len(), 6);
        assert_eq!(circ.to_string(), src);
    }

    #[test]
    fn out_of_frame_gates_are_rejected() {
        let mut circ = Circuit::new(2, 0);
        assert!(circ.push(Gate::H(Qubit::Receiver(0))).is_err());
        assert!(circ
            .push(Gate::cnot(Qubit::Sender(0), Qubit::Sender(2), LaurentPoly::one()).unwrap())
            .is_err());
        let err = Circuit::from_text("circuit frames=2 receivers=0\n\nH 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn inverse_reverses_and_inverts() {
        let circ: Circuit = "circuit frames=2 receivers=0\nH 1\nICNOT 2 (1)/(1+D)\n"
            .parse()
            .unwrap();
        let inv = circ.inverse();
        assert_eq!(inv.gates[1], Gate::H(Qubit::Sender(0)));
        assert_eq!(inv.gates[0].to_string(), "ICNOT 2 (1+D)/(1)");
    }
}
