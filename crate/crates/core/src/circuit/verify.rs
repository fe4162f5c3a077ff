//! Symbolic verification of encoders and decoders.
//!
//! An encoder is correct when the stabilizer it prepares from the unencoded
//! state has the target's row space on the sender's qubits. The receiver's
//! columns are pinned down only up to a receiver-local transformation: the
//! row operations the synthesis performs (rescaling by `1/l_ii`, clearing
//! denominators) act on both halves of a row at once, so the receiver's half
//! of a correct encoder generally differs from the unit augmentation. Both
//! the strict comparison against the unit augmentation and the sender-side
//! comparison are reported; the verdict is the sender-side one, since
//! syndromes depend only on the sender's half.

use super::{initial_state, Circuit, StabilizerState};
use crate::error::{Error, Result};
use crate::gram_schmidt::standard_form_check;
use crate::pauli::CheckMatrix;
use crate::poly::RationalPoly;
use crate::symplectic::omega_matrix;

/// Prepends `c` receiver columns: row `2p` gets `Z` and row `2p+1` gets `X`
/// on receiver qubit `p`, so every pair's product cancels. Requires the
/// target's product matrix to be `⊕^c J ⊕ 0`.
pub fn augment_receiver(target: &CheckMatrix, c: usize) -> Result<CheckMatrix> {
    match standard_form_check(&omega_matrix(target)) {
        Some((pairs, _)) if pairs == c => {}
        _ => {
            return Err(Error::DimensionMismatch(format!(
                "target is not in standard form with {c} ebit pairs"
            )))
        }
    }
    let mut recv = CheckMatrix::zeros(target.r(), c);
    for p in 0..c {
        recv.set_z(2 * p, p, RationalPoly::one());
        recv.set_x(2 * p + 1, p, RationalPoly::one());
    }
    recv.hstack_qubits(target)
}

/// Outcome of running an encoder on the unencoded state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncoderReport {
    /// The sender's half of the prepared stabilizer spans the target.
    pub sender_equal: bool,
    /// The full stabilizer equals the target with unit receiver columns.
    pub strict_equal: bool,
    /// First target row (1-based) outside the prepared row space, if any.
    pub first_mismatch: Option<usize>,
    /// The stabilizer the encoder prepares.
    pub stabilizer: CheckMatrix,
}

impl EncoderReport {
    pub fn passed(&self) -> bool {
        self.sender_equal
    }
}

pub fn verify_encoder_report(
    circ: &Circuit,
    target: &CheckMatrix,
    c: usize,
    a: usize,
    k: usize,
) -> Result<EncoderReport> {
    let n = a + 2 * c + k;
    if target.n() != n || circ.n != n || circ.c != c {
        return Err(Error::DimensionMismatch(format!(
            "circuit on {}+{} qubits, target on {}, code needs {c}+{n}",
            circ.c,
            circ.n,
            target.n()
        )));
    }
    let out = initial_state(c, a, k, n)?.run(circ)?;
    let sender = out.stab.qubits(c, c + n);
    let sender_full = sender.full();
    let first_mismatch = (0..target.r())
        .find(|&i| !sender_full.row_space_contains(&target.row_range(i, i + 1).full()))
        .map(|i| i + 1);
    let sender_equal = first_mismatch.is_none() && sender.row_space_equal(target);
    let strict_equal = augment_receiver(target, c)
        .map(|aug| aug.row_space_equal(&out.stab))
        .unwrap_or(false);
    Ok(EncoderReport {
        sender_equal,
        strict_equal,
        first_mismatch,
        stabilizer: out.stab,
    })
}

/// `true` when `circ` prepares a stabilizer whose sender half spans
/// `target`. Dimension errors count as failure.
pub fn verify_encoder(circ: &Circuit, target: &CheckMatrix, c: usize, a: usize, k: usize) -> bool {
    verify_encoder_report(circ, target, c, a, k).is_ok_and(|r| r.passed())
}

/// Outcome of an encode-then-decode round trip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoderReport {
    /// First information-qubit row (1-based) whose residue is not a
    /// stabilizer combination.
    pub first_mismatch: Option<usize>,
    pub infinite_depth_gates: usize,
    pub state: StabilizerState,
}

impl DecoderReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none() && self.infinite_depth_gates == 0
    }
}

pub fn verify_decoder_report(
    encoder: &Circuit,
    decoder: &Circuit,
    c: usize,
    a: usize,
    k: usize,
    n: usize,
) -> Result<DecoderReport> {
    let start = initial_state(c, a, k, n)?;
    let end = start.run(encoder)?.run(decoder)?;
    let stab = end.stab.full();
    let first_mismatch = (0..start.logical.r())
        .find(|&i| {
            let row = |m: &CheckMatrix| m.row_range(i, i + 1).full();
            let residue = row(&end.logical)
                .add(&row(&start.logical))
                .expect("rows of equal width");
            !stab.row_space_contains(&residue)
        })
        .map(|i| i + 1);
    Ok(DecoderReport {
        first_mismatch,
        infinite_depth_gates: decoder.infinite_depth_count(),
        state: end,
    })
}

/// `true` when decoding after encoding returns every information qubit to
/// its original form up to stabilizer rows, using finite-depth gates only.
pub fn verify_decoder(encoder: &Circuit, decoder: &Circuit, c: usize, a: usize, k: usize, n: usize) -> bool {
    verify_decoder_report(encoder, decoder, c, a, k, n).is_ok_and(|r| r.passed())
}
