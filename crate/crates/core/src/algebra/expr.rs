//! Parser for small polynomial expressions such as `a^2*x^4 - 1 + 16/a^2`.
//!
//! One identifier is the indeterminate; `i` is the imaginary unit; every other
//! identifier must be a bound rational parameter. Juxtaposition multiplies
//! (`2 x`, `a (x+1)`). Division is allowed only by constants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::Poly;
use super::scalar::{GaussianRational, Q};
use crate::error::{Error, Result};

/// Named rational parameters (`a`, `b`, `alpha`, …).
pub type Params = BTreeMap<String, Q>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = src.chars().collect();
    let mut k = 0;
    while k < cs.len() {
        let c = cs[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let s = k;
            while k < cs.len() && cs[k].is_ascii_digit() {
                k += 1;
            }
            let lit: String = cs[s..k].iter().collect();
            out.push(Tok::Num(lit.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = k;
            while k < cs.len() && (cs[k].is_ascii_alphanumeric() || cs[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(cs[s..k].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{src}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    var: &'a str,
    params: &'a Params,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in `{}`", self.src))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.err("division by a non-constant or zero"));
                    }
                    acc = acc.scale(&d.coeff(0).inv()?);
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let Some(Tok::Num(e)) = self.peek().cloned() else {
                return Err(self.err("exponent must be a nonnegative integer"));
            };
            self.pos += 1;
            let e: usize = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok((0..e).fold(Poly::one(), |acc, _| &acc * &base));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::from_rational(Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == self.var {
                    Ok(Poly::x())
                } else if name == "i" {
                    Ok(Poly::constant(GaussianRational::i()))
                } else if let Some(v) = self.params.get(&name) {
                    Ok(Poly::from_rational(v.clone()))
                } else {
                    Err(self.err(&format!("unbound identifier `{name}`")))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parses `src` as a polynomial in the indeterminate `var`.
pub fn parse_poly_in(src: &str, var: &str, params: &Params) -> Result<Poly> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Ok(Poly::zero());
    }
    let mut p = Parser { toks, pos: 0, var, params, src };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses `src` as a polynomial in `x`.
pub fn parse_poly(src: &str, params: &Params) -> Result<Poly> {
    parse_poly_in(src, "x", params)
}

/// Parses a constant expression (no indeterminate).
pub fn parse_const(src: &str, params: &Params) -> Result<GaussianRational> {
    let p = parse_poly_in(src, "\u{0}", params)?;
    Ok(if p.is_zero() { GaussianRational::new(Q::zero(), Q::zero()) } else { p.coeff(0) })
}
