//! Stabilizer and information-qubit matrices tracked through a circuit.

use super::{Circuit, Gate, Qubit};
use crate::error::{Error, Result};
use crate::pauli::CheckMatrix;
use crate::poly::RationalPoly;
use crate::symplectic::cross_products;

/// Stabilizer rows and logical rows over `c + n` columns (receiver first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerState {
    pub stab: CheckMatrix,
    pub logical: CheckMatrix,
    pub c: usize,
}

impl StabilizerState {
    pub fn n(&self) -> usize {
        self.stab.n() - self.c
    }

    /// Every stabilizer row commutes with every stabilizer and logical row.
    pub fn commutes(&self) -> bool {
        cross_products(&self.stab, &self.stab).is_zero() && cross_products(&self.stab, &self.logical).is_zero()
    }

    pub fn apply(&self, gate: &Gate) -> Result<Self> {
        let mut next = self.clone();
        gate.apply(&mut next.stab, self.c)?;
        gate.apply(&mut next.logical, self.c)?;
        debug_assert!(gate.preserves_products(), "gate {gate} breaks commutation");
        Ok(next)
    }

    pub fn run(&self, circ: &Circuit) -> Result<Self> {
        if circ.n != self.n() || circ.c != self.c {
            return Err(Error::DimensionMismatch(format!(
                "circuit for n={} c={} run on a state with n={} c={}",
                circ.n,
                circ.c,
                self.n(),
                self.c
            )));
        }
        let mut s = self.clone();
        for g in &circ.gates {
            s = s.apply(g)?;
        }
        debug_assert!(s.commutes(), "circuit broke commutation");
        Ok(s)
    }
}

/// The unencoded state: `c` ebits shared with the receiver, `a` ancillas in
/// `|0>` and `k + c` information qubits, with `n = a + 2c + k`.
///
/// Stabilizer rows are `Z_Bi Z_ei` for each ebit, then `X_Bi X_ei`, then `Z`
/// on each ancilla. Logical rows are `Z` then `X` on each information qubit.
pub fn initial_state(c: usize, a: usize, k: usize, n: usize) -> Result<StabilizerState> {
    if a + 2 * c + k != n {
        return Err(Error::DimensionMismatch(format!(
            "a + 2c + k = {} differs from the frame size {n}",
            a + 2 * c + k
        )));
    }
    let cols = c + n;
    let info = k + c;
    let col = |q: Qubit| q.column(c);
    let mut stab = CheckMatrix::zeros(2 * c + a, cols);
    for i in 0..c {
        let e = col(Qubit::Sender(a + i));
        stab.set_z(i, col(Qubit::Receiver(i)), RationalPoly::one());
        stab.set_z(i, e, RationalPoly::one());
        stab.set_x(c + i, col(Qubit::Receiver(i)), RationalPoly::one());
        stab.set_x(c + i, e, RationalPoly::one());
    }
    for j in 0..a {
        stab.set_z(2 * c + j, col(Qubit::Sender(j)), RationalPoly::one());
    }
    let mut logical = CheckMatrix::zeros(2 * info, cols);
    for j in 0..info {
        let q = col(Qubit::Sender(a + c + j));
        logical.set_z(j, q, RationalPoly::one());
        logical.set_x(info + j, q, RationalPoly::one());
    }
    Ok(StabilizerState { stab, logical, c })
}
