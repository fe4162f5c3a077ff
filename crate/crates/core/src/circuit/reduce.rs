//! Finite-depth reduction of commuting polynomial rows.
//!
//! Each row is cleared column by column with CNOT, H and P gates. Across
//! columns the `x` parts go through a Euclidean algorithm driven by CNOTs,
//! leftover `z` parts are reduced modulo the surviving `x` entry by
//! polynomial controlled-Z gadgets, and the last column is cleared with
//! palindromic phase gadgets, which exist because the row is isotropic.

use super::{Circuit, Gate, Qubit};
use crate::error::{Error, Result};
use crate::pauli::CheckMatrix;
use crate::poly::{LaurentPoly, PolyMatrix, RationalPoly};
use crate::symplectic::cross_products;

/// A sender-only tableau plus the gates applied to it so far.
pub(super) struct Reducer {
    pub m: CheckMatrix,
    pub gates: Vec<Gate>,
}

fn poly_at(v: &RationalPoly) -> Result<LaurentPoly> {
    v.as_poly()
        .cloned()
        .ok_or_else(|| Error::ReductionFailure("rational entry in a row being reduced".into()))
}

impl Reducer {
    pub fn new(m: CheckMatrix) -> Self {
        Reducer { m, gates: Vec::new() }
    }

    fn gate(&mut self, g: Gate) {
        g.apply(&mut self.m, 0).expect("reducer gates address valid columns");
        self.gates.push(g);
    }

    pub fn h(&mut self, q: usize) {
        self.gate(Gate::H(Qubit::Sender(q)));
    }

    fn p(&mut self, q: usize) {
        self.gate(Gate::P(Qubit::Sender(q)));
    }

    /// `x_dst += f·x_src`.
    fn cnot(&mut self, src: usize, dst: usize, f: LaurentPoly) {
        let g = Gate::cnot(Qubit::Sender(src), Qubit::Sender(dst), f).expect("distinct, nonzero");
        self.gate(g);
    }

    /// `z_dst += f·x_src` and `z_src += f(D^-1)·x_dst`.
    fn poly_cz(&mut self, src: usize, dst: usize, f: LaurentPoly) {
        self.h(dst);
        self.cnot(src, dst, f);
        self.h(dst);
    }

    /// `z_q += f·f(D^-1)·x_q`, leaving every other column as it was. The
    /// helper column `b` is borrowed and restored whatever it holds.
    fn palindromic_phase(&mut self, q: usize, f: LaurentPoly, b: usize) {
        if f.is_one() {
            self.p(q);
            return;
        }
        self.cnot(q, b, f.clone());
        self.p(b);
        self.cnot(q, b, f.clone());
        self.p(b);
        self.poly_cz(q, b, f);
    }

    fn x(&self, row: usize, q: usize) -> Result<LaurentPoly> {
        poly_at(self.m.x_at(row, q))
    }

    fn z(&self, row: usize, q: usize) -> Result<LaurentPoly> {
        poly_at(self.m.z_at(row, q))
    }

    /// Reduces `row` to a single `x` entry on column `target` using only
    /// columns `target..n`. Earlier columns are never touched.
    pub fn reduce_row(&mut self, row: usize, target: usize) -> Result<()> {
        let n = self.m.n();
        let cols: Vec<usize> = (target..n).collect();
        let p = loop {
            let p = self.euclid_x(row, &cols)?;
            for &q in &cols {
                if q == p {
                    continue;
                }
                let xp = self.x(row, p)?;
                loop {
                    let zq = self.z(row, q)?;
                    if zq.is_zero() || zq.span() < xp.span() {
                        break;
                    }
                    self.poly_cz(p, q, zq.euclid_quotient(&xp)?);
                }
            }
            match cols.iter().find(|&&q| q != p && !self.m.z_at(row, q).is_zero()) {
                Some(&q) => self.h(q),
                None => break p,
            }
        };
        self.clear_column(row, p)?;
        if p != target {
            let one = LaurentPoly::one();
            self.cnot(p, target, one.clone());
            self.cnot(target, p, one.clone());
            self.cnot(p, target, one);
        }
        Ok(())
    }

    /// Runs the Euclidean algorithm on the `x` parts over `cols` until one
    /// column is left; returns it.
    fn euclid_x(&mut self, row: usize, cols: &[usize]) -> Result<usize> {
        loop {
            let live: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&q| !self.m.x_at(row, q).is_zero())
                .collect();
            if live.is_empty() {
                let Some(&q) = cols.iter().find(|&&q| !self.m.z_at(row, q).is_zero()) else {
                    return Err(Error::ReductionFailure(format!(
                        "row {} vanishes on the free columns (rank deficiency)",
                        row + 1
                    )));
                };
                self.h(q);
                continue;
            }
            if live.len() == 1 {
                return Ok(live[0]);
            }
            let spans: Vec<usize> = live
                .iter()
                .map(|&q| self.x(row, q).map(|v| v.span()))
                .collect::<Result<_>>()?;
            let (best, _) = spans
                .iter()
                .enumerate()
                .min_by_key(|&(i, s)| (*s, i))
                .expect("nonempty");
            let p = live[best];
            let xp = self.x(row, p)?;
            for &q in &live {
                if q == p {
                    continue;
                }
                loop {
                    let xq = self.x(row, q)?;
                    if xq.is_zero() || xq.span() < xp.span() {
                        break;
                    }
                    self.cnot(p, q, xq.euclid_quotient(&xp)?);
                }
            }
        }
    }

    /// Clears `z` on the single remaining column `p` of an isotropic row,
    /// leaving `x` only.
    fn clear_column(&mut self, row: usize, p: usize) -> Result<()> {
        let n = self.m.n();
        let helper = (0..n).find(|&b| b != p);
        loop {
            let z = self.z(row, p)?;
            let x = self.x(row, p)?;
            if z.is_zero() {
                return Ok(());
            }
            if x.is_zero() {
                self.h(p);
                return Ok(());
            }
            if !(&z * &x.time_reverse()).is_palindromic() {
                return Err(Error::ReductionFailure(format!("row {} is not isotropic", row + 1)));
            }
            let reduce_z = z.span() >= x.span();
            let (big, small) = if reduce_z { (&z, &x) } else { (&x, &z) };
            // Spans add to an even number because z·x(D^-1) is centered.
            let d = ((big.span() - small.span()) / 2) as i64;
            let f = if d == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::from_exponents([0, d])
            };
            if !f.is_one() && helper.is_none() {
                return Err(Error::ReductionFailure(
                    "a single-qubit frame cannot host the phase gadget".into(),
                ));
            }
            let b = helper.unwrap_or(p);
            if reduce_z {
                self.palindromic_phase(p, f, b);
            } else {
                self.h(p);
                self.palindromic_phase(p, f, b);
                self.h(p);
            }
        }
    }
}

/// Reduces the pairwise commuting polynomial rows `rows` of `m` so that row
/// `rows[t]` has only `x` entries, on columns `0..=t`, with a nonzero entry
/// on column `t`. Returns the final tableau and the gates applied.
pub fn reduce_isotropic_rows(m: &CheckMatrix, rows: &[usize]) -> Result<(CheckMatrix, Vec<Gate>)> {
    if rows.len() > m.n() {
        return Err(Error::ReductionFailure(format!(
            "{} commuting rows cannot fit {} columns",
            rows.len(),
            m.n()
        )));
    }
    let sub = select_rows(m, rows);
    if !cross_products(&sub, &sub).is_zero() {
        return Err(Error::ReductionFailure("rows to reduce do not commute".into()));
    }
    let mut red = Reducer::new(m.clone());
    for (t, &row) in rows.iter().enumerate() {
        red.reduce_row(row, t)?;
    }
    Ok((red.m, red.gates))
}

pub(super) fn select_rows(m: &CheckMatrix, rows: &[usize]) -> CheckMatrix {
    let mut out = CheckMatrix::zeros(rows.len(), m.n());
    for (i, &r) in rows.iter().enumerate() {
        for q in 0..m.n() {
            out.set_z(i, q, m.z_at(r, q).clone());
            out.set_x(i, q, m.x_at(r, q).clone());
        }
    }
    out
}

fn lcm_of_denominators(m: &CheckMatrix, row: usize) -> LaurentPoly {
    m.z_row(row)
        .iter()
        .chain(m.x_row(row))
        .fold(LaurentPoly::one(), |acc, v| acc.lcm(v.den()))
}

/// Reduces the last `a` rows (the ancillas) of a standard-form matrix to `Z`
/// on the first `a` qubits, then clears the pair rows there with row
/// operations. The result is `[[0, Z'|0, X'], [I, 0|0, 0]]`.
pub fn ancilla_block_reduce(h: &CheckMatrix, c: usize, a: usize) -> Result<(Circuit, CheckMatrix)> {
    if h.r() != 2 * c + a {
        return Err(Error::DimensionMismatch(format!(
            "{} rows do not split into {c} pairs and {a} ancillas",
            h.r()
        )));
    }
    let n = h.n();
    let mut circ = Circuit::new(n, 0);
    if a == 0 {
        return Ok((circ, h.clone()));
    }
    let mut m = h.clone();
    for i in 2 * c..2 * c + a {
        let s = lcm_of_denominators(&m, i);
        if !s.is_one() {
            m.scale_row(i, &s.into());
        }
    }
    let rows: Vec<usize> = (2 * c..2 * c + a).collect();
    let (mut m, mut gates) = reduce_isotropic_rows(&m, &rows)?;
    for q in 0..a {
        let g = Gate::H(Qubit::Sender(q));
        g.apply(&mut m, 0)?;
        gates.push(g);
    }
    // Ancilla rows are now [L 0 | 0 0] with L lower triangular.
    for (t, &i) in rows.iter().enumerate() {
        let lii = m.z_at(i, t).clone();
        m.scale_row(i, &lii.inverse()?);
        for &j in &rows[t + 1..] {
            let v = m.z_at(j, t).clone();
            if !v.is_zero() {
                m.add_row_multiple(j, i, &v);
            }
        }
    }
    for &i in rows.iter().rev() {
        let t = i - 2 * c;
        for &j in &rows[..t] {
            let v = m.z_at(j, t).clone();
            if !v.is_zero() {
                m.add_row_multiple(j, i, &v);
            }
        }
    }
    for i in 0..2 * c {
        for (t, &anc) in rows.iter().enumerate() {
            if !m.x_at(i, t).is_zero() {
                return Err(Error::ReductionFailure(format!(
                    "pair row {} has X support on ancilla qubit {}",
                    i + 1,
                    t + 1
                )));
            }
            let v = m.z_at(i, t).clone();
            if !v.is_zero() {
                m.add_row_multiple(i, anc, &v);
            }
        }
    }
    circ.extend(gates)?;
    circ.cancel_adjacent();
    Ok((circ, m))
}

/// Output of the ebit-block reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EbitReduction {
    pub circuit: Circuit,
    /// Row `t` of the permuted matrix is input row `permutation[t]`.
    pub permutation: Vec<usize>,
    /// Lower triangular factor left on the first `c` rows.
    pub l: PolyMatrix,
    /// Upper triangular `Z` block of the last `c` rows at the same stage.
    pub u: PolyMatrix,
    /// `[[I 0|0 0], [X1' Z2'|I X2']]`.
    pub matrix: CheckMatrix,
}

/// Reduces `2c` rows with product matrix `⊕^c J` to
/// `[[I 0|0 0], [X1' Z2'|I X2']]` by finite-depth gates and row operations.
pub fn ebit_block_reduce(h: &CheckMatrix, c: usize) -> Result<EbitReduction> {
    if h.r() != 2 * c || h.n() < c {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix is not a block of {c} ebit pairs",
            h.r(),
            h.n()
        )));
    }
    let n = h.n();
    let permutation: Vec<usize> = (0..c).map(|i| 2 * i).chain((0..c).map(|i| 2 * i + 1)).collect();
    let mut m = select_rows(h, &permutation);
    // Work on polynomial multiples of the first block, undo the scale after.
    let scales: Vec<LaurentPoly> = (0..c).map(|i| lcm_of_denominators(&m, i)).collect();
    for (i, s) in scales.iter().enumerate() {
        if !s.is_one() {
            m.scale_row(i, &s.clone().into());
        }
    }
    let first: Vec<usize> = (0..c).collect();
    let (mut m, gates) = reduce_isotropic_rows(&m, &first)?;
    for (i, s) in scales.iter().enumerate() {
        if !s.is_one() {
            m.scale_row(i, &RationalPoly::from(s.clone()).inverse()?);
        }
    }
    let mut l = PolyMatrix::zeros(c, c);
    let mut u = PolyMatrix::zeros(c, c);
    for i in 0..c {
        for j in 0..c {
            l.set(i, j, m.x_at(i, j).clone());
            u.set(i, j, m.z_at(c + i, j).clone());
        }
    }
    let l_inv = l
        .inverse()
        .ok_or_else(|| Error::ReductionFailure("triangular factor is singular".into()))?;
    let mut normalized = CheckMatrix::new(&l_inv * &m.z().row_range(0, c), &l_inv * &m.x().row_range(0, c))?;
    let second = m.row_range(c, 2 * c);
    // Ω(F, M·S) = Ω(F, S)·M(D^-1)ᵀ, so M = (P(D^-1)ᵀ)^-1 restores identity.
    let p = cross_products(&normalized, &second);
    let mt = p
        .transpose()
        .time_reverse()
        .inverse()
        .ok_or_else(|| Error::ReductionFailure("ebit pairs are degenerate".into()))?;
    let second = CheckMatrix::new(&mt * second.z(), &mt * second.x())?;
    normalized = normalized.vstack(&second)?;
    let mut circ = Circuit::new(n, 0);
    circ.extend(gates)?;
    for q in 0..c {
        let g = Gate::H(Qubit::Sender(q));
        g.apply(&mut normalized, 0)?;
        circ.push(g)?;
    }
    circ.cancel_adjacent();
    Ok(EbitReduction {
        circuit: circ,
        permutation,
        l,
        u,
        matrix: normalized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_rational;

    fn cm(z: &[&[&str]], x: &[&[&str]]) -> CheckMatrix {
        let m = |rows: &[&[&str]]| {
            PolyMatrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|s| parse_rational(s).unwrap()).collect())
                    .collect(),
            )
            .unwrap()
        };
        CheckMatrix::new(m(z), m(x)).unwrap()
    }

    fn replay(m: &CheckMatrix, gates: &[Gate]) -> CheckMatrix {
        let mut out = m.clone();
        for g in gates {
            g.apply(&mut out, 0).unwrap();
        }
        out
    }

    #[test]
    fn single_row_reduces_to_one_x_entry() {
        let h = cm(&[&["0", "D", "D"]], &[&["1+D", "1", "1+D"]]);
        let (m, gates) = reduce_isotropic_rows(&h, &[0]).unwrap();
        assert_eq!(replay(&h, &gates), m);
        assert!(m.z().is_zero());
        assert!(!m.x_at(0, 0).is_zero());
        assert!(m.x_at(0, 1).is_zero() && m.x_at(0, 2).is_zero());
    }

    #[test]
    fn palindromic_column_is_cleared() {
        // z·x(D^-1) = D^-1 + D: needs the two-sided phase gadget.
        let h = cm(&[&["1+D^2", "0"]], &[&["D", "0"]]);
        let (m, gates) = reduce_isotropic_rows(&h, &[0]).unwrap();
        assert_eq!(replay(&h, &gates), m);
        assert!(m.z().is_zero() && !m.x_at(0, 0).is_zero());
    }

    #[test]
    fn non_commuting_rows_are_rejected() {
        let h = cm(&[&["1", "0"], &["0", "0"]], &[&["0", "0"], &["1", "0"]]);
        assert!(matches!(
            reduce_isotropic_rows(&h, &[0, 1]),
            Err(Error::ReductionFailure(_))
        ));
    }

    #[test]
    fn ancilla_only_code() {
        let h = cm(&[&["1", "0"]], &[&["0", "0"]]);
        let (circ, m) = ancilla_block_reduce(&h, 0, 1).unwrap();
        assert!(m.row_space_equal(&h));
        assert!(m.z_at(0, 0).is_one() && m.z_at(0, 1).is_zero() && m.x().is_zero());
        let mut replayed = h.clone();
        circ.apply_to(&mut replayed).unwrap();
        assert!(replayed.row_space_equal(&m));
    }

    #[test]
    fn no_ancillas_means_no_gates() {
        let h = cm(&[&["1", "0"], &["0", "0"]], &[&["0", "0"], &["1", "0"]]);
        let (circ, m) = ancilla_block_reduce(&h, 1, 0).unwrap();
        assert!(circ.is_empty());
        assert_eq!(m, h);
    }

    #[test]
    fn ebit_pair_in_target_shape_needs_only_relabeling() {
        let h = cm(&[&["1", "0"], &["0", "0"]], &[&["0", "0"], &["1", "0"]]);
        let red = ebit_block_reduce(&h, 1).unwrap();
        assert!(red.matrix.row_space_equal(&h));
        assert!(red.matrix.z_at(0, 0).is_one() && red.matrix.x_at(1, 0).is_one());
        assert!(red.circuit.is_empty());
    }
}
