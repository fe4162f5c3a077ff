//! Encoder and decoder synthesis from a standard-form check matrix.
//!
//! The forward reduction takes the standard form to `[[I 0|0 0], [X1' Z2'|I
//! X2']]` on the ebit block plus `Z` on the ancillas. The encoder builds
//! that shape from ebits with CNOTs, Hadamards and one infinite-depth gate
//! per non-trivial denominator, then runs the forward reduction backwards.
//! The decoder runs the reduction forwards and strips the numerators with
//! CNOTs controlled by the receiver's qubits.

use super::reduce::{ancilla_block_reduce, ebit_block_reduce};
use super::{initial_state, Circuit, Gate, Qubit};
use crate::error::{Error, Result};
use crate::gram_schmidt::GsResult;
use crate::poly::{LaurentPoly, PolyMatrix, RationalPoly};

/// Intermediate matrices of the synthesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncoderPlan {
    pub n: usize,
    pub c: usize,
    pub a: usize,
    pub k: usize,
    /// Diagonal of `Γ(D)`: row `i`'s least common denominator, low exponent 0.
    pub gamma: Vec<LaurentPoly>,
    /// `Γ·Z2'` and `Γ·X2'`, each `c x (k+c)`.
    pub z2n: PolyMatrix,
    pub x2n: PolyMatrix,
    /// `Z` block left on the ebit qubits by the `X2N` CNOTs.
    pub a_matrix: PolyMatrix,
    /// `Z` block left on the receiver's qubits by the decoder's `X2N` CNOTs.
    pub b_matrix: PolyMatrix,
    /// Lower triangular factor of the first ebit rows after reduction.
    pub l: PolyMatrix,
    /// Upper triangular `Z` block of the second ebit rows at that stage.
    pub u: PolyMatrix,
    /// Row `t` of the permuted pair block is standard-form row `permutation[t]`.
    pub permutation: Vec<usize>,
    /// Forward finite-depth reductions, sender qubits only.
    pub ancilla_gates: Circuit,
    pub ebit_gates: Circuit,
}

impl EncoderPlan {
    fn ebit(&self, i: usize) -> Qubit {
        Qubit::Sender(self.a + i)
    }

    fn info(&self, j: usize) -> Qubit {
        Qubit::Sender(self.a + self.c + j)
    }

    /// Information qubits that receive `Z2N` entries. Only these need the
    /// Hadamard: on the others it commutes to the start of the encoder and
    /// the end of the decoder and cancels.
    fn hadamard_columns(&self) -> Vec<usize> {
        (0..self.k + self.c)
            .filter(|&j| (0..self.c).any(|i| !self.z2n.get(i, j).is_zero()))
            .collect()
    }

    fn numerator_cnots(&self, m: &PolyMatrix, control: impl Fn(usize) -> Qubit) -> Vec<Gate> {
        let mut out = Vec::new();
        for i in 0..self.c {
            for j in 0..self.k + self.c {
                if let Some(f) = m.get(i, j).as_poly().filter(|f| !f.is_zero()) {
                    out.push(Gate::cnot(control(i), self.info(j), f.clone()).expect("distinct qubits"));
                }
            }
        }
        out
    }

    /// The encoder up to and including the infinite-depth step.
    fn ebit_stage(&self) -> Vec<Gate> {
        let mut gates = self.numerator_cnots(&self.z2n, |i| self.ebit(i));
        gates.extend(self.hadamard_columns().into_iter().map(|j| Gate::H(self.info(j))));
        gates.extend(self.numerator_cnots(&self.x2n, |i| self.ebit(i)));
        for (i, g) in self.gamma.iter().enumerate() {
            if g.is_one() {
                continue;
            }
            // Conjugated by H: z ← z/Γ(D^-1) and x ← Γ·x on the ebit qubit.
            let filter = RationalPoly::from(g.time_reverse()).inverse().expect("nonzero");
            gates.push(Gate::H(self.ebit(i)));
            gates.push(Gate::Icnot {
                q: self.ebit(i),
                g: filter,
            });
            gates.push(Gate::H(self.ebit(i)));
        }
        gates
    }

    pub fn encoder(&self) -> Circuit {
        let mut circ = Circuit::new(self.n, self.c);
        let reverse =
            |c: &Circuit, by: usize| -> Vec<Gate> { c.inverse().gates.iter().map(|g| g.offset(by)).collect() };
        circ.extend(self.ebit_stage()).expect("gates fit the frame");
        circ.extend(reverse(&self.ebit_gates, self.a))
            .expect("gates fit the frame");
        circ.extend(reverse(&self.ancilla_gates, 0))
            .expect("gates fit the frame");
        circ.cancel_adjacent();
        circ
    }

    pub fn decoder(&self) -> Circuit {
        let mut circ = Circuit::new(self.n, self.c);
        let push = |circ: &mut Circuit, gates: Vec<Gate>| circ.extend(gates).expect("gates fit the frame");
        push(&mut circ, self.ancilla_gates.gates.clone());
        push(
            &mut circ,
            self.ebit_gates.gates.iter().map(|g| g.offset(self.a)).collect(),
        );
        push(&mut circ, self.numerator_cnots(&self.x2n, Qubit::Receiver));
        push(
            &mut circ,
            self.hadamard_columns()
                .into_iter()
                .map(|j| Gate::H(self.info(j)))
                .collect(),
        );
        push(&mut circ, self.numerator_cnots(&self.z2n, Qubit::Receiver));
        circ.cancel_adjacent();
        circ
    }
}

/// Builds the plan and the encoder for a standard-form result.
pub fn synthesize_encoder(gs: &GsResult) -> Result<(Circuit, EncoderPlan)> {
    let (n, c, a) = (gs.n(), gs.c, gs.a);
    if gs.h_std.r() != 2 * c + a || n < 2 * c + a {
        return Err(Error::DimensionMismatch(format!(
            "{} generators ({c} pairs, {a} ancillas) on {n} qubits: the encoder needs n >= 2c + a",
            gs.h_std.r()
        )));
    }
    let k = n - 2 * c - a;
    let info = k + c;
    let (ancilla_gates, reduced) = ancilla_block_reduce(&gs.h_std, c, a)?;
    let pairs = reduced.row_range(0, 2 * c).qubits(a, n);
    let red = ebit_block_reduce(&pairs, c)?;

    let mut gamma = Vec::with_capacity(c);
    let mut z2n = PolyMatrix::zeros(c, info);
    let mut x2n = PolyMatrix::zeros(c, info);
    for i in 0..c {
        let row = c + i;
        let g = (c..c + info).fold(LaurentPoly::one(), |acc, q| {
            acc.lcm(red.matrix.z_at(row, q).den())
                .lcm(red.matrix.x_at(row, q).den())
        });
        let gr = RationalPoly::from(g.clone());
        for j in 0..info {
            z2n.set(i, j, &gr * red.matrix.z_at(row, c + j));
            x2n.set(i, j, &gr * red.matrix.x_at(row, c + j));
        }
        gamma.push(g);
    }
    let mut plan = EncoderPlan {
        n,
        c,
        a,
        k,
        gamma,
        z2n,
        x2n,
        a_matrix: PolyMatrix::zeros(c, c),
        b_matrix: PolyMatrix::zeros(c, c),
        l: red.l,
        u: red.u,
        permutation: red.permutation,
        ebit_gates: red.circuit,
        ancilla_gates,
    };
    fill_stage_blocks(&mut plan)?;
    Ok((plan.encoder(), plan))
}

/// Reads `A(D)` and `B(D)` off a simulation of the unencoded state.
fn fill_stage_blocks(plan: &mut EncoderPlan) -> Result<()> {
    let (c, a) = (plan.c, plan.a);
    let start = initial_state(c, a, plan.k, plan.n)?;
    let mut pre = Circuit::new(plan.n, c);
    pre.extend(plan.numerator_cnots(&plan.z2n, |i| plan.ebit(i)))?;
    pre.extend(plan.hadamard_columns().into_iter().map(|j| Gate::H(plan.info(j))))?;
    pre.extend(plan.numerator_cnots(&plan.x2n, |i| plan.ebit(i)))?;
    let s = start.run(&pre)?;
    let mut post = Circuit::new(plan.n, c);
    post.extend(plan.ebit_stage().into_iter().skip(pre.len()))?;
    post.extend(plan.numerator_cnots(&plan.x2n, Qubit::Receiver))?;
    let t = s.run(&post)?;
    for s_row in 0..c {
        for i in 0..c {
            let col = plan.ebit(i).column(c);
            plan.a_matrix.set(s_row, i, s.stab.z_at(c + s_row, col).clone());
            plan.b_matrix.set(s_row, i, t.stab.z_at(c + s_row, i).clone());
        }
    }
    Ok(())
}

/// The finite-depth decoder matching `plan`.
pub fn synthesize_decoder(plan: &EncoderPlan) -> Circuit {
    plan.decoder()
}
