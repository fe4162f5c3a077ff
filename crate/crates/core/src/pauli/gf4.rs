//! Classical convolutional codes over GF(4) and their quantum images.
//!
//! An element is `a + b·w` with `w^2 = w + 1`, so `W = w^2 = 1 + w`. The
//! map to Paulis is `0 -> I`, `w -> X`, `1 -> Y`, `W -> Z`, which in bits
//! is `z = a`, `x = a + b`.

use std::fmt;
use std::ops::{Add, Mul};

use super::CheckMatrix;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, PolyMatrix, Scanner};
use crate::text::{content_lines, header_fields, split_with_offsets};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gf4 {
    a: bool,
    b: bool,
}

impl Gf4 {
    pub const ZERO: Gf4 = Gf4 { a: false, b: false };
    pub const ONE: Gf4 = Gf4 { a: true, b: false };
    pub const W: Gf4 = Gf4 { a: false, b: true };
    pub const W_BAR: Gf4 = Gf4 { a: true, b: true };

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::W, Gf4::W_BAR];

    pub fn symbol(self) -> char {
        match (self.a, self.b) {
            (false, false) => '0',
            (true, false) => '1',
            (false, true) => 'w',
            (true, true) => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::W),
            'W' => Some(Gf4::W_BAR),
            _ => None,
        }
    }

    /// `(z, x)` bits of the Pauli this element maps to.
    pub fn pauli_bits(self) -> (bool, bool) {
        (self.a, self.a ^ self.b)
    }
}

impl Add for Gf4 {
    type Output = Gf4;

    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4 {
            a: self.a ^ rhs.a,
            b: self.b ^ rhs.b,
        }
    }
}

impl Mul for Gf4 {
    type Output = Gf4;

    // (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w
    fn mul(self, rhs: Gf4) -> Gf4 {
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        Gf4 {
            a: (a & c) ^ (b & d),
            b: (a & d) ^ (b & c) ^ (b & d),
        }
    }
}

/// A polynomial with GF(4) coefficients, kept as `a(D) + b(D)·w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gf4Poly {
    a: LaurentPoly,
    b: LaurentPoly,
}

impl Gf4Poly {
    pub fn new(a: LaurentPoly, b: LaurentPoly) -> Self {
        Gf4Poly { a, b }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff · D^exp`.
    pub fn term(coeff: Gf4, exp: i64) -> Self {
        let m = |bit: bool| {
            if bit {
                LaurentPoly::monomial(exp)
            } else {
                LaurentPoly::zero()
            }
        };
        Gf4Poly {
            a: m(coeff.a),
            b: m(coeff.b),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn coeff(&self, exp: i64) -> Gf4 {
        Gf4 {
            a: self.a.coeff(exp),
            b: self.b.coeff(exp),
        }
    }

    pub fn scale(&self, c: Gf4) -> Self {
        let mut out = Gf4Poly::zero();
        if c.a {
            out = &out + self;
        }
        if c.b {
            // w·(a + bw) = b + (a + b)w
            out = &out + &Gf4Poly::new(self.b.clone(), &self.a + &self.b);
        }
        out
    }

    /// The Pauli images of the coefficients as `(z(D), x(D))`.
    pub fn to_binary(&self) -> (LaurentPoly, LaurentPoly) {
        (self.a.clone(), &self.a + &self.b)
    }

    fn exponents(&self) -> Vec<i64> {
        let mut e: Vec<i64> = self.a.exponents().chain(self.b.exponents()).collect();
        e.sort_unstable();
        e.dedup();
        e
    }
}

impl Add for &Gf4Poly {
    type Output = Gf4Poly;

    fn add(self, rhs: &Gf4Poly) -> Gf4Poly {
        Gf4Poly {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl fmt::Display for Gf4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps = self.exponents();
        if exps.is_empty() {
            return f.write_str("0");
        }
        for (i, e) in exps.into_iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            let c = self.coeff(e);
            match (c == Gf4::ONE, e) {
                (true, 0) => f.write_str("1")?,
                (true, 1) => f.write_str("D")?,
                (true, _) => write!(f, "D^{e}")?,
                (false, 0) => write!(f, "{}", c.symbol())?,
                (false, 1) => write!(f, "{}D", c.symbol())?,
                (false, _) => write!(f, "{}D^{e}", c.symbol())?,
            }
        }
        Ok(())
    }
}

/// Classical GF(4) check matrix, `rows x cols`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf4Matrix {
    cols: usize,
    rows: Vec<Vec<Gf4Poly>>,
}

impl Gf4Matrix {
    pub fn new(cols: usize, rows: Vec<Vec<Gf4Poly>>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "GF(4) row has {} entries, expected {cols}",
                r.len()
            )));
        }
        Ok(Gf4Matrix { cols, rows })
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Gf4Poly {
        &self.rows[i][j]
    }

    /// Parses `gf4 cols=<n> rows=<r>` followed by one line of
    /// comma-separated polynomials per row. Terms are `c`, `D^k`, `cD^k` or
    /// `c*D^k` with `c` in `{1, w, W}`.
    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = content_lines(src);
        let Some((hline, header)) = lines.next() else {
            return Err(Error::EmptyInput);
        };
        let dims = header_fields(header, hline, Some("gf4"), &["cols", "rows"])?;
        let (cols, nrows) = (dims[0], dims[1]);
        if nrows == 0 {
            return Err(Error::EmptyInput);
        }
        let mut rows = Vec::with_capacity(nrows);
        let mut last = hline;
        for i in 0..nrows {
            let Some((line_no, line)) = lines.next() else {
                return Err(Error::parse(last + 1, 1, format!("expected {nrows} rows, found {i}")));
            };
            last = line_no;
            let fields = split_with_offsets(line, ',');
            if fields.len() != cols {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("expected {cols} entries, found {}", fields.len()),
                ));
            }
            let row = fields
                .into_iter()
                .map(|(off, f)| parse_gf4_poly(f).map_err(|e| e.at_line(line_no, off)))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, 1, "unexpected line after the last row"));
        }
        Gf4Matrix::new(cols, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("gf4 cols={} rows={}\n", self.cols, self.rows.len());
        for r in &self.rows {
            let entries: Vec<String> = r.iter().map(ToString::to_string).collect();
            out.push_str(&entries.join(", "));
            out.push('\n');
        }
        out
    }
}

/// Parses a single GF(4) polynomial.
pub fn parse_gf4_poly(s: &str) -> Result<Gf4Poly> {
    let mut sc = Scanner::new(s);
    if sc.peek() == Some('0') {
        sc.bump();
        sc.finish()?;
        return Ok(Gf4Poly::zero());
    }
    let mut p = gf4_term(&mut sc)?;
    while sc.eat('+') {
        p = &p + &gf4_term(&mut sc)?;
    }
    sc.finish()?;
    Ok(p)
}

fn gf4_term(sc: &mut Scanner) -> Result<Gf4Poly> {
    let coeff = match sc.peek() {
        Some(c @ ('1' | 'w' | 'W')) => {
            sc.bump();
            Gf4::from_symbol(c)
        }
        Some('D') => None,
        _ => return Err(sc.error("expected a GF(4) term")),
    };
    let has_power = match (coeff, sc.peek()) {
        (None, _) => true,
        (Some(_), Some('*')) => {
            sc.bump();
            true
        }
        (Some(_), Some('D')) => true,
        _ => false,
    };
    let exp = if has_power { sc.power_of_d()? } else { 0 };
    Ok(Gf4Poly::term(coeff.unwrap_or(Gf4::ONE), exp))
}

/// Quantum check matrix of a classical GF(4) code: rows `0..r` come from
/// `W·H`, rows `r..2r` from `w·H`, each mapped letterwise to Paulis.
pub fn gf4_import(hc: &Gf4Matrix) -> Result<CheckMatrix> {
    let r = hc.rows();
    let n = hc.cols();
    let mut z = PolyMatrix::zeros(2 * r, n);
    let mut x = PolyMatrix::zeros(2 * r, n);
    for (block, scalar) in [Gf4::W_BAR, Gf4::W].into_iter().enumerate() {
        for i in 0..r {
            for q in 0..n {
                let (zp, xp) = hc.entry(i, q).scale(scalar).to_binary();
                z.set(block * r + i, q, zp.into());
                x.set(block * r + i, q, xp.into());
            }
        }
    }
    CheckMatrix::new(z, x)
}

/// `(2k - n) / n` for a classical code with `n` columns and `n - k` rows:
/// a lower bound on the entanglement-assisted information rate.
pub fn gf4_rate_lower_bound(hc: &Gf4Matrix) -> num_rational::Ratio<i64> {
    let n = hc.cols() as i64;
    let k = n - hc.rows() as i64;
    num_rational::Ratio::new(2 * k - n, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_from_the_table() {
        assert_eq!(Gf4::W * Gf4::W_BAR, Gf4::ONE);
        assert_eq!(Gf4::W * Gf4::W, Gf4::W_BAR);
        assert_eq!(Gf4::ONE + Gf4::W + Gf4::W_BAR, Gf4::ZERO);
        for x in Gf4::ALL {
            assert_eq!(x * Gf4::ONE, x);
            assert_eq!(x * Gf4::ZERO, Gf4::ZERO);
        }
    }

    #[test]
    fn symbol_map_to_paulis() {
        assert_eq!(Gf4::ZERO.pauli_bits(), (false, false));
        assert_eq!(Gf4::W.pauli_bits(), (false, true));
        assert_eq!(Gf4::ONE.pauli_bits(), (true, true));
        assert_eq!(Gf4::W_BAR.pauli_bits(), (true, false));
    }

    #[test]
    fn scalar_multiplication_matches_pointwise_products() {
        let p = parse_gf4_poly("1 + WD + wD^3 + D^-2").unwrap();
        for c in Gf4::ALL {
            let s = p.scale(c);
            for e in -3..5 {
                assert_eq!(s.coeff(e), c * p.coeff(e));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let p = parse_gf4_poly("W*D^2 + 1 + wD").unwrap();
        assert_eq!(p.to_string(), "1+wD+WD^2");
        assert_eq!(parse_gf4_poly(&p.to_string()).unwrap(), p);
        assert!(parse_gf4_poly("x").is_err());
        assert!(matches!(parse_gf4_poly("1 + wD^"), Err(Error::Parse { column: 8, .. })));
    }
}
