//! Polynomial text grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?  |  '-' factor
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition is rejected: `xy` is a (probably unknown) identifier and
//! `2x` is a syntax error.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::{Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                return Err(Error::Parse {
                    pos: i,
                    msg: "implicit multiplication is not allowed; use `*`".into(),
                });
            }
            out.push((start, Token::Int(s[start..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Ident(s[start..i].to_string())));
        } else if "+-*^/()".contains(c) {
            out.push((i, Token::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Some(Token::Ident(_)) | Some(Token::Int(_)) | Some(Token::Op('(')) => {
                self.err("implicit multiplication is not allowed; use `*`")
            }
            Some(Token::Op('/')) => self.err("division is only allowed between integer literals"),
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Int(n)) => {
                    self.pos += 1;
                    let n: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(n))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n);
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            q /= Rational::from_integer(d);
                        }
                        Some(Token::Int(_)) => return self.err("division by zero"),
                        _ => return self.err("expected an integer denominator"),
                    }
                }
                Ok(Polynomial::constant(self.ring, q))
            }
            Some(Token::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    self.ring.var(i)
                }
                None => self.err(format!("unknown variable `{name}`")),
            },
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses one polynomial in `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = p.expr()?;
    if p.pos != p.tokens.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Parses a comma-separated list of polynomials. An empty or blank string is
/// the empty list.
pub fn parse_polynomial_list(ring: &Ring, text: &str) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(parse_piece(ring, text, start, i)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !text[start..].trim().is_empty() || !out.is_empty() {
        out.push(parse_piece(ring, text, start, text.len())?);
    }
    Ok(out)
}

fn parse_piece(ring: &Ring, text: &str, start: usize, end: usize) -> Result<Polynomial> {
    parse_polynomial(ring, &text[start..end]).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + start, msg },
        other => other,
    })
}
