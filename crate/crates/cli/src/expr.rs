//! A small expression language for elements of H_n.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? digits)?
//! atom  := digits ('/' digits)? | 'q' | 's'i | 'y'i | 'u'i | '(' expr ')'
//! ```
//!
//! Negative powers invert scalars, q, and single basis words with an
//! invertible coefficient (in particular generators).

use std::fmt;
use std::str::FromStr;

use hecke_core::scalar::Coefficient;
use hecke_core::{Hecke, HeckeElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigRational),
    Q,
    Gen(usize),
    Jm(usize),
    Intertwiner(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Core(#[from] hecke_core::Error),
    #[error("cannot invert {0}: only scalars and single basis words have inverses here")]
    NotInvertible(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(char, usize),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |offset, message: &str| ParseError { offset, message: message.to_string() };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(BigInt::from_str(&input[start..i]).expect("digits"))));
                continue;
            }
            b'q' => Tok::Q,
            b's' | b'y' | b'u' => {
                i += 1;
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits == i {
                    return Err(err(start, &format!("expected an index after '{}'", c as char)));
                }
                let idx = input[digits..i].parse().map_err(|_| err(digits, "index too large"))?;
                out.push((start, Tok::Ident(c as char, idx)));
                continue;
            }
            _ => {
                let ch = input[i..].chars().next().unwrap();
                return Err(err(start, &format!("unexpected character '{ch}'")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), message: message.into() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let negative = self.eat(&Tok::Minus);
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                let at = self.offset();
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    return self.fail("exponent must be an integer");
                }
                let k: i64 =
                    i64::try_from(&k).map_err(|_| ParseError { offset: at, message: "exponent too large".into() })?;
                Ok(Expr::Pow(Box::new(base), if negative { -k } else { k }))
            }
            _ => self.fail("exponent must be an integer"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return self.fail("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Int(p) => {
                if self.eat(&Tok::Slash) {
                    match self.peek().cloned() {
                        Some(Tok::Int(r)) if r != BigInt::from(0) => {
                            self.pos += 1;
                            Ok(Expr::Num(BigRational::new(p, r)))
                        }
                        Some(Tok::Int(_)) => self.fail("zero denominator"),
                        _ => self.fail("expected a denominator after '/'"),
                    }
                } else {
                    Ok(Expr::Num(BigRational::from_integer(p)))
                }
            }
            Tok::Q => Ok(Expr::Q),
            Tok::Ident(c, i) => {
                let (lo, hi, node) = match c {
                    's' => (1, self.n.saturating_sub(1), Expr::Gen(i)),
                    'y' => (1, self.n, Expr::Jm(i)),
                    _ => (2, self.n, Expr::Intertwiner(i)),
                };
                if i < lo || i > hi {
                    return Err(ParseError {
                        offset: at,
                        message: format!("index {c}{i} out of range {lo}..={hi} for rank {}", self.n),
                    });
                }
                Ok(node)
            }
            Tok::LParen => {
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.fail("expected ')'");
                }
                Ok(e)
            }
            Tok::RParen => Err(ParseError { offset: at, message: "unexpected ')'".into() }),
            Tok::Slash => Err(ParseError { offset: at, message: "'/' only appears inside rational literals".into() }),
            _ => Err(ParseError { offset: at, message: "expected an operand".into() }),
        }
    }
}

/// Parses `input` as an element of H_n.
pub fn parse(input: &str, n: usize) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0, end: input.len(), n };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(r) if r.is_negative() => 0,
            _ => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let wrap = self.precedence() < min;
        if wrap {
            write!(f, "(")?;
        }
        match self {
            Expr::Num(r) => write!(f, "{r}")?,
            Expr::Q => write!(f, "q")?,
            Expr::Gen(i) => write!(f, "s{i}")?,
            Expr::Jm(i) => write!(f, "y{i}")?,
            Expr::Intertwiner(i) => write!(f, "u{i}")?,
            Expr::Neg(x) => {
                write!(f, "-")?;
                x.write(f, 3)?;
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write(f, 1)?;
                write!(f, "{}", if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.write(f, 2)?;
                write!(f, "*")?;
                b.write(f, 3)?;
            }
            Expr::Pow(x, k) => {
                x.write(f, 5)?;
                write!(f, "^{k}")?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }

    /// Interprets the expression in H_n.
    pub fn evaluate<C: Coefficient>(&self, h: &Hecke<C>, n: usize) -> Result<HeckeElement<C>, EvalError> {
        Ok(match self {
            Expr::Num(r) => HeckeElement::scalar(n, C::from_rational(r)),
            Expr::Q => HeckeElement::scalar(n, h.q().clone()),
            Expr::Gen(i) => h.generator(*i, n)?,
            Expr::Jm(i) => h.jucys_murphy(*i, n)?,
            Expr::Intertwiner(i) => h.intertwiner(i - 1, n)?,
            Expr::Neg(x) => x.evaluate(h, n)?.neg(),
            Expr::Add(a, b) => a.evaluate(h, n)?.add(&b.evaluate(h, n)?)?,
            Expr::Sub(a, b) => a.evaluate(h, n)?.sub(&b.evaluate(h, n)?)?,
            Expr::Mul(a, b) => h.mul(&a.evaluate(h, n)?, &b.evaluate(h, n)?)?,
            Expr::Pow(x, k) => {
                let base = x.evaluate(h, n)?;
                let base = if *k < 0 { invert(h, &base, x)? } else { base };
                h.pow(&base, k.unsigned_abs() as u32)?
            }
        })
    }
}

fn invert<C: Coefficient>(h: &Hecke<C>, x: &HeckeElement<C>, e: &Expr) -> Result<HeckeElement<C>, EvalError> {
    let mut terms = x.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) => {
            let inv = c.inv().map_err(|_| EvalError::NotInvertible(e.to_string()))?;
            Ok(h.basis_inverse(w)?.scale(&inv))
        }
        _ => Err(EvalError::NotInvertible(e.to_string())),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hecke_core::scalar::RatFunc;

    fn eval(s: &str, n: usize) -> HeckeElement<RatFunc> {
        parse(s, n).unwrap().evaluate(&Hecke::symbolic(), n).unwrap()
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("1 + 2*3", 2).unwrap().to_string(), "1 + 2*3");
        assert_eq!(parse("(1 + 2)*3", 2).unwrap().to_string(), "(1 + 2)*3");
        assert_eq!(parse("-q^2", 2).unwrap(), Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Q), 2))));
        assert_eq!(parse("1 - 2 - 3", 2).unwrap().to_string(), "1 - 2 - 3");
        assert_eq!(parse("1 - (2 - 3)", 2).unwrap().to_string(), "1 - (2 - 3)");
        assert_eq!(parse("q^-1", 2).unwrap(), Expr::Pow(Box::new(Expr::Q), -1));
    }

    #[test]
    fn identities_evaluate_to_zero() {
        assert!(eval("s1*s2*s1 - s2*s1*s2", 3).is_zero());
        assert!(eval("s1^2 - 1 - (q - q^-1)*s1", 2).is_zero());
        assert!(eval("y3 - s2*y2*s2", 3).is_zero());
        assert!(eval("u3 - (s2*y2 - y2*s2)", 3).is_zero());
        assert!(eval("s1*s1^-1 - 1", 2).is_zero());
        assert!(eval("(s1*s2)^-1*s1*s2 - 1", 3).is_zero());
        assert!(eval("q*q^-1 - 1", 1).is_zero());
        assert!(eval("3/4*4/3 - 1", 1).is_zero());
    }

    #[test]
    fn unit_and_row_idempotent() {
        let h: Hecke<RatFunc> = Hecke::symbolic();
        assert_eq!(eval("1", 3), HeckeElement::one(3));
        let e = eval("(s1 + q^-1)*(q + q^-1)^-1", 2);
        let e2 = h.mul(&e, &e).unwrap();
        assert_eq!(e, e2);
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse("s1 + s3", 3).unwrap_err();
        assert_eq!(e.offset, 5);
        assert!(e.message.contains("out of range"));
        assert_eq!(parse("s1 +", 2).unwrap_err().offset, 4);
        assert_eq!(parse("s1 ^ q", 2).unwrap_err().message, "exponent must be an integer");
        assert_eq!(parse("s1^1/2", 2).unwrap_err().message, "exponent must be an integer");
        assert_eq!(parse("(s1", 2).unwrap_err().offset, 3);
        assert_eq!(parse("s1 $", 2).unwrap_err().offset, 3);
        assert_eq!(parse("y0", 2).unwrap_err().offset, 0);
        assert_eq!(parse("u1", 2).unwrap_err().offset, 0);
        assert_eq!(parse("1/0", 2).unwrap_err().message, "zero denominator");
    }

    #[test]
    fn non_invertible_power() {
        let err = parse("(1 + s1)^-1", 2).unwrap().evaluate(&Hecke::<RatFunc>::symbolic(), 2).unwrap_err();
        assert!(matches!(err, EvalError::NotInvertible(_)));
    }
}
