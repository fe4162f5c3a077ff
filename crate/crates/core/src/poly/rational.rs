//! Ratios of binary Laurent polynomials.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use super::LaurentPoly;
use crate::error::{Error, Result};

/// `num / den` in canonical form: `den` has lowest exponent 0 and shares
/// no nonunit factor with `num`. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalPoly {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = den.low_exponent().unwrap();
        let num = num.shift(-shift);
        let den = den.core();
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?.expect("gcd divides numerator");
        let den = den.div_exact(&g)?.expect("gcd divides denominator").core();
        Ok(RationalPoly { num, den })
    }

    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn monomial(exp: i64) -> Self {
        LaurentPoly::monomial(exp).into()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial this value equals, if its denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// `Some(m)` when the value is exactly `D^m`.
    pub fn monomial_exponent(&self) -> Option<i64> {
        self.as_poly().and_then(LaurentPoly::monomial_exponent)
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// Substitutes `D -> D^-1`.
    pub fn time_reverse(&self) -> Self {
        Self::new(self.num.time_reverse(), self.den.time_reverse()).expect("reversal keeps the denominator nonzero")
    }
}

impl From<LaurentPoly> for RationalPoly {
    fn from(num: LaurentPoly) -> Self {
        RationalPoly {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl Default for RationalPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        if self.den == rhs.den {
            return RationalPoly::new(&self.num + &rhs.num, self.den.clone()).expect("denominator is nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalPoly::new(num, &self.den * &rhs.den).expect("denominator is nonzero")
    }
}

impl Add for RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: RationalPoly) -> RationalPoly {
        &self + &rhs
    }
}

impl AddAssign<&RationalPoly> for RationalPoly {
    fn add_assign(&mut self, rhs: &RationalPoly) {
        *self = &*self + rhs;
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return (&self.num * &rhs.num).into();
        }
        RationalPoly::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominator is nonzero")
    }
}

impl Mul for RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: RationalPoly) -> RationalPoly {
        &self * &rhs
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[i64]) -> LaurentPoly {
        LaurentPoly::from_exponents(exps.iter().copied())
    }

    #[test]
    fn canonical_form_shifts_and_reduces() {
        let a = RationalPoly::new(p(&[1, 2]), p(&[0, 2])).unwrap();
        assert_eq!(a.num(), &p(&[1]));
        assert_eq!(a.den(), &p(&[0, 1]));
        let b = RationalPoly::new(p(&[3]), p(&[2, 3])).unwrap();
        assert_eq!(b, a);
    }

    #[test]
    fn entries_of_the_worked_example() {
        let inv = RationalPoly::new(LaurentPoly::one(), p(&[0, 1, 2])).unwrap();
        let x = &inv * &RationalPoly::from(p(&[1, 2]));
        assert_eq!(x.to_string(), "(D+D^2)/(1+D+D^2)");
    }

    #[test]
    fn time_reverse_moves_denominator_shift_into_numerator() {
        let a = RationalPoly::new(LaurentPoly::one(), p(&[0, 1, 2])).unwrap();
        let r = a.time_reverse();
        assert_eq!(r.num(), &p(&[2]));
        assert_eq!(r.den(), &p(&[0, 1, 2]));
        assert_eq!(r.time_reverse(), a);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(RationalPoly::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn sum_to_zero_is_canonical() {
        let a = RationalPoly::new(p(&[0]), p(&[0, 1])).unwrap();
        let s = &a + &a;
        assert_eq!(s, RationalPoly::zero());
        assert!(s.den().is_one());
    }
}
