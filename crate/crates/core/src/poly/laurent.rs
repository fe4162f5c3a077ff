//! Binary Laurent polynomials in the delay operator `D`.
//!
//! A polynomial is stored as a bit block anchored at its lowest exponent:
//! bit `i` of `bits` is the coefficient of `D^(low + i)`. The representation
//! is canonical: the zero polynomial has no words, and a nonzero polynomial
//! has bit 0 set and a nonzero last word.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    bits: Vec<u64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            bits: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `D^exp`.
    pub fn monomial(exp: i64) -> Self {
        LaurentPoly {
            low: exp,
            bits: vec![1],
        }
    }

    /// Builds a polynomial from exponents; repeated exponents cancel in pairs.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let exps: Vec<i64> = exps.into_iter().collect();
        let Some(&low) = exps.iter().min() else {
            return Self::zero();
        };
        let high = *exps.iter().max().unwrap();
        let mut bits = vec![0u64; ((high - low) as usize) / WORD + 1];
        for e in exps {
            let i = (e - low) as usize;
            bits[i / WORD] ^= 1u64 << (i % WORD);
        }
        normalize(low, bits)
    }

    /// Polynomial with nonnegative exponents from a coefficient bit mask
    /// (bit `i` is the coefficient of `D^i`).
    pub fn from_mask(mask: u64) -> Self {
        normalize(0, vec![mask])
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.bits.len() == 1 && self.bits[0] == 1
    }

    /// Returns `Some(m)` when the polynomial is exactly `D^m`.
    pub fn monomial_exponent(&self) -> Option<i64> {
        (self.bits.len() == 1 && self.bits[0] == 1).then_some(self.low)
    }

    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.span() as i64)
    }

    /// `high - low` for nonzero polynomials, 0 for zero. Units (monomials)
    /// have span 0; Euclidean reductions decrease this quantity.
    pub fn span(&self) -> usize {
        match self.bits.last() {
            None => 0,
            Some(last) => self.bits.len() * WORD - 1 - last.leading_zeros() as usize,
        }
    }

    /// Number of nonzero terms.
    pub fn weight(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn coeff(&self, exp: i64) -> bool {
        if self.is_zero() || exp < self.low {
            return false;
        }
        let i = (exp - self.low) as usize;
        i / WORD < self.bits.len() && (self.bits[i / WORD] >> (i % WORD)) & 1 == 1
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.bits.iter().enumerate().flat_map(move |(wi, &w)| {
            let base = self.low + (wi * WORD) as i64;
            BitIter(w).map(move |b| base + b as i64)
        })
    }

    /// Multiplies by `D^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            low: if self.is_zero() { 0 } else { self.low + k },
            bits: self.bits.clone(),
        }
    }

    /// Substitutes `D -> D^-1`.
    pub fn time_reverse(&self) -> Self {
        Self::from_exponents(self.exponents().map(|e| -e))
    }

    /// Reads the polynomial as one in `D^(1/l)` (exponents in units of `1/l`)
    /// and nulls every fractional power: exponents divisible by `l` survive,
    /// divided by `l`.
    pub fn floor_fractional(&self, l: usize) -> Self {
        assert!(l >= 1, "expansion factor must be positive");
        let l = l as i64;
        Self::from_exponents(
            self.exponents()
                .filter(|e| e.rem_euclid(l) == 0)
                .map(|e| e.div_euclid(l)),
        )
    }

    /// Substitutes `D -> D^l` (the inverse of flooring on integer powers).
    pub fn inflate(&self, l: usize) -> Self {
        Self::from_exponents(self.exponents().map(|e| e * l as i64))
    }

    /// The polynomial divided by its lowest monomial, so its lowest exponent
    /// is 0. Zero maps to zero.
    pub fn core(&self) -> Self {
        LaurentPoly {
            low: 0,
            bits: self.bits.clone(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.time_reverse()
    }

    /// Euclidean division of the nonnegative-exponent cores:
    /// `core(self) = q * core(d) + r` with `span(r) < span(d)` or `r = 0`.
    pub fn div_rem_core(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let (q, r) = div_rem_bits(&self.bits, &d.bits);
        Ok((normalize(0, q), normalize(0, r)))
    }

    /// Exact division in the Laurent ring; `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem_core(d)?;
        if !r.is_zero() {
            return Ok(None);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        Ok(Some(q.shift(self.low - d.low)))
    }

    /// Quotient `q` such that `self + q*d` has strictly smaller span than
    /// `self`, provided `span(self) >= span(d)`. This is one Euclidean step
    /// in the Laurent ring.
    pub fn euclid_quotient(&self, d: &Self) -> Result<Self> {
        let (q, _) = self.div_rem_core(d)?;
        Ok(q.shift(self.low - d.low))
    }

    /// Greatest common divisor, normalized to lowest exponent 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.core();
        let mut b = other.core();
        while !b.is_zero() {
            let r = if a.is_zero() {
                Self::zero()
            } else {
                normalize(0, div_rem_bits(&a.bits, &b.bits).1)
            };
            a = b;
            b = r.core();
        }
        a
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let prod = &self.core() * &other.core();
        prod.div_exact(&g)
            .expect("gcd is nonzero")
            .expect("gcd divides the product")
            .core()
    }
}

fn normalize(low: i64, mut bits: Vec<u64>) -> LaurentPoly {
    while bits.last() == Some(&0) {
        bits.pop();
    }
    let Some(first) = bits.iter().position(|&w| w != 0) else {
        return LaurentPoly::zero();
    };
    let s = first * WORD + bits[first].trailing_zeros() as usize;
    if s > 0 {
        bits = shr_bits(&bits, s);
    }
    LaurentPoly {
        low: low + s as i64,
        bits,
    }
}

fn shr_bits(src: &[u64], s: usize) -> Vec<u64> {
    let ws = s / WORD;
    let bs = s % WORD;
    let n = src.len() - ws;
    let mut out = vec![0u64; n];
    for i in 0..n {
        let lo = src[i + ws] >> bs;
        let hi = if bs > 0 && i + ws + 1 < src.len() {
            src[i + ws + 1] << (WORD - bs)
        } else {
            0
        };
        out[i] = lo | hi;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn xor_shl_into(dst: &mut Vec<u64>, src: &[u64], s: usize) {
    let ws = s / WORD;
    let bs = s % WORD;
    let need = src.len() + ws + 1;
    if dst.len() < need {
        dst.resize(need, 0);
    }
    for (i, &w) in src.iter().enumerate() {
        dst[i + ws] ^= w << bs;
        if bs > 0 {
            dst[i + ws + 1] ^= w >> (WORD - bs);
        }
    }
}

fn degree_bits(bits: &[u64]) -> Option<usize> {
    let mut n = bits.len();
    while n > 0 && bits[n - 1] == 0 {
        n -= 1;
    }
    (n > 0).then(|| n * WORD - 1 - bits[n - 1].leading_zeros() as usize)
}

fn div_rem_bits(a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let db = degree_bits(b).expect("nonzero divisor");
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() + 1];
    while let Some(dr) = degree_bits(&r) {
        if dr < db {
            break;
        }
        let s = dr - db;
        q[s / WORD] ^= 1u64 << (s % WORD);
        xor_shl_into(&mut r, b, s);
    }
    (q, r)
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(t)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let mut bits = Vec::new();
        xor_shl_into(&mut bits, &self.bits, (self.low - low) as usize);
        xor_shl_into(&mut bits, &rhs.bits, (rhs.low - low) as usize);
        normalize(low, bits)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (sparse, dense) = if self.weight() <= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut bits = Vec::with_capacity(self.bits.len() + rhs.bits.len() + 1);
        for (wi, &w) in sparse.bits.iter().enumerate() {
            for b in BitIter(w) {
                xor_shl_into(&mut bits, &dense.bits, wi * WORD + b as usize);
            }
        }
        normalize(self.low + rhs.low, bits)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, e) in self.exponents().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("D")?,
                _ => write!(f, "D^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
