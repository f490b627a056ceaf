//! Reader for the printed form of rational functions.
//!
//! Accepts integers, `v`, `v^k` (k may be negative), `+ - * /` with the usual
//! precedence, unary minus and parentheses. Everything the printer emits is
//! accepted.

use num_bigint::BigInt;

use super::{LaurentPoly, RatFun};
use crate::error::{Error, Result};

pub(super) fn parse(s: &str) -> Result<RatFun> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(r)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
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

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let f = self.unary()?;
            acc = if c == b'*' { acc * f } else { acc.div(&f)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFun> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.atom()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    /// Optional `^k` suffix, `k` a possibly negative integer.
    fn power(&mut self, base: RatFun) -> Result<RatFun> {
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let k = self.integer()?;
        let k = i32::try_from(k).map_err(|_| self.err("exponent too large"))?;
        base.pow(if neg { -k } else { k })
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                self.power(e)
            }
            Some(b'v') => {
                self.pos += 1;
                self.power(RatFun::v())
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(RatFun::from_laurent(LaurentPoly::constant(k)))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_forms() {
        let a = parse("(2*v^3 - v + 1)/(v^2 + 1)").unwrap();
        assert_eq!(a.to_string(), "(2*v^3 - v + 1)/(v^2 + 1)");
        assert_eq!(parse("v^-2").unwrap(), RatFun::v_pow(-2));
        assert_eq!(parse(" -v ").unwrap(), -RatFun::v());
        assert_eq!(parse("(v - 1)^2/2").unwrap().to_string(), "(v^2 - 2*v + 1)/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("v +").is_err());
        assert!(parse("(v").is_err());
        assert!(parse("x").is_err());
        assert!(matches!(parse("1/(v - v)"), Err(Error::DivisionByZero)));
    }
}
