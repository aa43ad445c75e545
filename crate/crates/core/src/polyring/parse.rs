//! Text form of polynomials.
//!
//! ```text
//! poly   ::= ['-'] term (('+' | '-') term)*
//! term   ::= int | [int '*'] factor ('*' factor)*
//! factor ::= var ['^' int]
//! ```
//!
//! Whitespace is insignificant and integer coefficients are reduced mod p.

use super::{Monomial, Polynomial, Ring, RESERVED_PREFIX};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
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

    /// Unsigned integer, reduced mod `modulus` while scanning.
    fn int_mod(&mut self, modulus: u64) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut value = 0u64;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = (value * 10 + (b - b'0') as u64) % modulus;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        Ok(value)
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let mut value = 0u32;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u32))
                .ok_or(Error::ExponentOverflow)?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an exponent"));
        }
        Ok(value)
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&b) = self.src.get(self.pos) {
            if b.is_ascii_alphanumeric() || b == b'_' || (b == b'@' && self.pos == start) {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected a variable"));
        }
        // the scanned bytes are ASCII
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier"))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let at = self.pos;
        let name = self.ident()?;
        if name.starts_with(RESERVED_PREFIX) {
            return Err(Error::ReservedVariable(name.to_string()));
        }
        let idx = match self.ring.var_index(name) {
            Some(i) => i,
            None if name.as_bytes()[0].is_ascii_digit() => {
                self.pos = at;
                return Err(self.err("expected a variable"));
            }
            None => return Err(Error::UnknownVariable(name.to_string())),
        };
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.exponent()?
        } else {
            1
        };
        exps[idx] = exps[idx].checked_add(e).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }

    fn term(&mut self) -> Result<(i64, Monomial)> {
        let p = self.ring.p() as u64;
        let mut exps = vec![0u32; self.ring.nvars()];
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.int_mod(p)?;
                if self.peek() != Some(b'*') {
                    return Ok((c as i64, Monomial::new(exps)));
                }
                self.pos += 1;
                c
            }
            Some(_) => 1,
            None => return Err(self.err("unexpected end of input")),
        };
        self.factor(&mut exps)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((coeff as i64, Monomial::new(exps)))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = 1i64;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((sign * c, m));
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected `+`, `-` or end of input")),
                None => break,
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

impl Polynomial {
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            ring,
        }
        .poly()
    }
}
