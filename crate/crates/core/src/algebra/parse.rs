//! A small expression parser for coefficient strings such as
//! `"(C144^2 + 4*C143)/8"` or `"C244/C144"`.
//!
//! Division is only allowed by a constant multiple of a monomial, so every
//! parsed expression is a [`Frac`].

use std::iter::Peekable;
use std::str::CharIndices;

use super::frac::Frac;
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

pub fn parse_frac(src: &str) -> Result<Frac> {
    let mut p = Parser { src, it: src.char_indices().peekable() };
    let e = p.expr()?;
    p.skip_ws();
    if let Some(&(i, c)) = p.it.peek() {
        return Err(p.err(format!("unexpected `{c}` at offset {i}")));
    }
    Ok(e)
}

/// Parses an expression that must come out polynomial.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let f = parse_frac(src)?;
    if !f.is_poly() {
        return Err(Error::Parse(format!("`{src}` is not a polynomial")));
    }
    Ok(f.num().clone())
}

struct Parser<'a> {
    src: &'a str,
    it: Peekable<CharIndices<'a>>,
}

impl Parser<'_> {
    fn err(&self, msg: String) -> Error {
        Error::Parse(format!("{msg} in `{}`", self.src))
    }

    fn skip_ws(&mut self) {
        while self.it.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.it.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.it.peek().map(|&(_, c)| c)
    }

    fn expr(&mut self) -> Result<Frac> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.it.next();
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek() {
            self.it.next();
            let rhs = self.unary()?;
            acc = if op == '*' { &acc * &rhs } else { self.divide(&acc, &rhs)? };
        }
        Ok(acc)
    }

    fn divide(&self, a: &Frac, b: &Frac) -> Result<Frac> {
        if b.num().num_terms() != 1 {
            return Err(self.err(format!("division by non-monomial `{b}`")));
        }
        let (m, c) = b.num().leading().expect("one term");
        // a / (c*m/d) = a*d / (c*m)
        let num = a * &Frac::from(Poly::term(Rational::from_integer(1.into()), b.den().clone()));
        Ok(num.scale(&(Rational::from_integer(1.into()) / c)).div_monomial(m))
    }

    fn unary(&mut self) -> Result<Frac> {
        match self.peek() {
            Some('-') => {
                self.it.next();
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.it.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Frac> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.it.next();
            self.skip_ws();
            let mut digits = String::new();
            while let Some(&(_, c)) = self.it.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                digits.push(c);
                self.it.next();
            }
            let e: u32 = digits.parse().map_err(|_| self.err("bad exponent".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Frac> {
        match self.peek() {
            Some('(') => {
                self.it.next();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("missing `)`".into()));
                }
                self.it.next();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&(_, c)) = self.it.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    digits.push(c);
                    self.it.next();
                }
                let n: num_bigint::BigInt = digits.parse().map_err(|_| self.err("bad number".into()))?;
                Ok(Frac::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&(_, c)) = self.it.peek() {
                    if !(c.is_ascii_alphanumeric() || c == '_') {
                        break;
                    }
                    name.push(c);
                    self.it.next();
                }
                Ok(Poly::var(&name).into())
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input".into())),
        }
    }
}
