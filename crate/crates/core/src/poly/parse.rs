//! Text grammar for polynomials.
//!
//! ```text
//! poly     := "0" | term ("+" term)*
//! term     := "1" | "D" | "D^" ["-"] digits
//! rational := poly | "(" poly ")" "/" "(" poly ")"
//! ```
//!
//! Whitespace is ignored. Columns in errors are 1-based character offsets
//! into the original string; the line is always 1 (callers re-anchor).

use std::str::FromStr;

use super::{LaurentPoly, RationalPoly};
use crate::error::{Error, Result};

/// Whitespace-skipping character cursor that remembers source columns.
pub(crate) struct Scanner {
    chars: Vec<(usize, char)>,
    pos: usize,
    end_column: usize,
}

impl Scanner {
    pub(crate) fn new(s: &str) -> Self {
        let chars: Vec<(usize, char)> = s
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        let end_column = chars.last().map_or(1, |&(c, _)| c + 1);
        Scanner {
            chars,
            pos: 0,
            end_column,
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    pub(crate) fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end_column, |&(c, _)| c)
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        let found = match self.peek() {
            Some(c) => format!(", found '{c}'"),
            None => ", found end of input".to_string(),
        };
        Error::parse(1, self.column(), format!("{}{found}", message.into()))
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// Parses `D`, `D^k` or `D^-k` and returns the exponent.
    pub(crate) fn power_of_d(&mut self) -> Result<i64> {
        self.expect('D')?;
        if !self.eat('^') {
            return Ok(1);
        }
        let neg = self.eat('-');
        let start = self.column();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(self.error("expected an exponent after '^'"));
        }
        let v: i64 = digits
            .parse()
            .map_err(|_| Error::parse(1, start, "exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    pub(crate) fn poly(&mut self) -> Result<LaurentPoly> {
        if self.peek() == Some('0') {
            self.bump();
            return Ok(LaurentPoly::zero());
        }
        let mut exps = vec![self.term()?];
        while self.eat('+') {
            exps.push(self.term()?);
        }
        Ok(LaurentPoly::from_exponents(exps))
    }

    fn term(&mut self) -> Result<i64> {
        match self.peek() {
            Some('1') => {
                self.bump();
                Ok(0)
            }
            Some('D') => self.power_of_d(),
            _ => Err(self.error("expected a term '1', 'D' or 'D^k'")),
        }
    }

    pub(crate) fn rational(&mut self) -> Result<RationalPoly> {
        if !self.eat('(') {
            return Ok(self.poly()?.into());
        }
        let num = self.poly()?;
        self.expect(')')?;
        if !self.eat('/') {
            return Ok(num.into());
        }
        self.expect('(')?;
        let col = self.column();
        let den = self.poly()?;
        self.expect(')')?;
        if den.is_zero() {
            return Err(Error::parse(1, col, "denominator is the zero polynomial"));
        }
        RationalPoly::new(num, den)
    }
}

pub fn parse_poly(s: &str) -> Result<LaurentPoly> {
    let mut sc = Scanner::new(s);
    let p = sc.poly()?;
    sc.finish()?;
    Ok(p)
}

pub fn parse_rational(s: &str) -> Result<RationalPoly> {
    let mut sc = Scanner::new(s);
    let p = sc.rational()?;
    sc.finish()?;
    Ok(p)
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl FromStr for RationalPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_laurent_terms() {
        let p = parse_poly("D^-1 + 1 + D + D^2").unwrap();
        assert_eq!(p, LaurentPoly::from_exponents([-1, 0, 1, 2]));
        assert_eq!(parse_poly("0").unwrap(), LaurentPoly::zero());
        assert_eq!(parse_poly("D+D").unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn parses_rationals() {
        let r = parse_rational("(D^2+D)/(D^2+D+1)").unwrap();
        assert_eq!(r.to_string(), "(D+D^2)/(1+D+D^2)");
        assert_eq!(parse_rational("(1+D)").unwrap().to_string(), "1+D");
    }

    #[test]
    fn reports_column_of_missing_exponent() {
        match parse_poly("1 + D^") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!((line, column), (1, 7));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_zero_denominator_and_garbage() {
        assert!(parse_rational("(1)/(0)").is_err());
        assert!(parse_poly("1+X").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("1 1").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "D^-3+D^7", "(D^-1)/(1+D^3)"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }
}
