//! Reader for the canonical polynomial text form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := power (('*' | '/') power)*        // '/' only by nonzero constants
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! variable := name ('_(-' integer ')')?        // x_(-k) is jet level k-1
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, VarId};
use crate::error::{Error, Result};

pub fn parse_polynomial(src: &str) -> Result<Polynomial> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a variable name such as `e`, `x1` or `f_(-3)`.
pub fn parse_var(src: &str) -> Result<VarId> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let v = p.variable()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input after variable"));
    }
    Ok(v)
}

/// Parses `p/q` or `p` (optionally signed) into an exact rational.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let poly = parse_polynomial(src)?;
    if !poly.is_constant() {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected a rational number, got '{src}'"),
        });
    }
    Ok(poly.constant_term())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
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

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.power()?;
                if !d.is_constant() || d.is_zero() {
                    self.pos = at;
                    return Err(self.err("division only by nonzero constants"));
                }
                acc = acc.scale(&d.constant_term().recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(Polynomial::var(self.variable()?)),
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as integer"))
    }

    fn variable(&mut self) -> Result<VarId> {
        let start = self.pos;
        if !self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphabetic())
        {
            return Err(self.err("expected variable name"));
        }
        loop {
            match self.src.get(self.pos) {
                Some(c) if c.is_ascii_alphanumeric() => self.pos += 1,
                Some(b'_')
                    if self
                        .src
                        .get(self.pos + 1)
                        .is_some_and(|c| c.is_ascii_alphanumeric()) =>
                {
                    self.pos += 1
                }
                _ => break,
            }
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii name")
            .to_string();
        if self.src[self.pos..].starts_with(b"_(-") {
            self.pos += 3;
            let k = self.integer()?;
            if !self.src.get(self.pos).is_some_and(|&c| c == b')') {
                return Err(self.err("expected ')' after jet index"));
            }
            self.pos += 1;
            if k.is_zero() {
                return Err(self.err("jet index must be at least 1"));
            }
            let k: u32 = k.try_into().map_err(|_| self.err("jet index too large"))?;
            return Ok(VarId::new(&name, k - 1));
        }
        Ok(VarId::base(&name))
    }
}
