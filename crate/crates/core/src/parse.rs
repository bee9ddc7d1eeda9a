//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := sign? term (('+' | '-') term)*
//! term    := power (('*' | '/')? power)*      juxtaposition multiplies
//! power   := primary ('^' integer)?
//! primary := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are `x1`, `x_1` or `x_{1}`; a bare `x` is accepted only in
//! univariate mode, where it means `x1`. Division is only by nonzero
//! constants.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mpoly::MultiPoly;
use crate::ntkernel::Rational;

pub(crate) fn parse(src: &str, univariate: bool) -> Result<MultiPoly> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, univariate };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    univariate: bool,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: String::from(msg) }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    let c = d
                        .as_constant()
                        .filter(|c| !c.is_zero())
                        .ok_or(Error::Parse { pos: at, msg: String::from("can only divide by a nonzero constant") })?;
                    acc = acc.scale(&c.recip());
                }
                Some(c) if c.is_ascii_digit() || c == b'x' || c == b'(' => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.primary()?;
        if self.eat(b'^') {
            self.skip_ws();
            let braced = self.eat(b'{');
            let e = self.integer()?;
            if braced && !self.eat(b'}') {
                return Err(self.error("expected '}'"));
            }
            let e = u32::try_from(&e).map_err(|_| self.error("exponent out of range"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(MultiPoly::constant(Rational::from_integer(self.integer()?))),
            Some(b'x') => {
                self.pos += 1;
                self.variable()
            }
            Some(_) => Err(self.error("expected a number, variable or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn variable(&mut self) -> Result<MultiPoly> {
        let underscore = self.src.get(self.pos) == Some(&b'_');
        if underscore {
            self.pos += 1;
        }
        let braced = self.src.get(self.pos) == Some(&b'{');
        if braced {
            self.pos += 1;
        }
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            if !underscore && !braced && self.univariate {
                return Ok(MultiPoly::var(1));
            }
            return Err(self.error("expected a variable index"));
        }
        if self.univariate {
            return Err(self.error("indexed variables are not allowed here; use x"));
        }
        let idx = self.integer()?;
        if braced && self.src.get(self.pos) != Some(&b'}') {
            return Err(self.error("expected '}'"));
        }
        if braced {
            self.pos += 1;
        }
        match u32::try_from(&idx) {
            Ok(j) if j >= 1 => Ok(MultiPoly::var(j)),
            _ => Err(self.error(&format!("invalid variable index {idx}"))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| self.error("bad integer"))
    }
}
