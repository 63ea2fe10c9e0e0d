//! Exact polynomial expressions.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//!
//! Variables are `X`, `Y` for bivariate input and `t` for univariate input.
//! Other identifiers must be bound to rationals. Division is only by nonzero
//! constants, so `p/q` literals are ordinary division.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{BiPoly, Rat, UniPoly};

pub const MAX_EXPONENT: u32 = 256;
pub const MAX_DEGREE: u32 = 512;
pub const MAX_DEPTH: usize = 128;
pub const MAX_LITERAL_DIGITS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Uni,
    Bi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken(String),
    /// Decimal literals are inexact; write `p/q`.
    DecimalLiteral,
    UnboundIdentifier(String),
    NegativeExponent,
    ExponentTooLarge,
    DegreeTooLarge,
    LiteralTooLong,
    DivisionByZero,
    NonConstantDivisor,
    TooDeep,
    InvalidRational,
    InvalidBinding,
    InvalidBeta,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            UnexpectedEnd => write!(f, "unexpected end of input"),
            UnexpectedToken(t) => write!(f, "unexpected {t}"),
            DecimalLiteral => write!(f, "decimal literals are not exact; write a fraction p/q"),
            UnboundIdentifier(n) => {
                write!(f, "unbound identifier {n:?}; bind it with --let {n}=p/q")
            }
            NegativeExponent => write!(f, "exponents must be non-negative integers"),
            ExponentTooLarge => write!(f, "exponent exceeds {MAX_EXPONENT}"),
            DegreeTooLarge => write!(f, "degree exceeds {MAX_DEGREE}"),
            LiteralTooLong => write!(f, "integer literal exceeds {MAX_LITERAL_DIGITS} digits"),
            DivisionByZero => write!(f, "division by zero"),
            NonConstantDivisor => write!(f, "division is only allowed by nonzero constants"),
            TooDeep => write!(f, "nesting exceeds {MAX_DEPTH} levels"),
            InvalidRational => write!(f, "expected a rational p/q"),
            InvalidBinding => write!(f, "expected name=p/q"),
            InvalidBeta => write!(f, "expected r/s with positive integers"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at column {}", .pos + 1)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub pos: usize,
}

fn err<T>(kind: ParseErrorKind, pos: usize) -> Result<T, ParseError> {
    Err(ParseError { kind, pos })
}

pub type Bindings = BTreeMap<String, Rat>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            if i < b.len() && (b[i] == b'.' || b[i] == b'e' || b[i] == b'E') {
                return err(ParseErrorKind::DecimalLiteral, st);
            }
            if i - st > MAX_LITERAL_DIGITS {
                return err(ParseErrorKind::LiteralTooLong, st);
            }
            let n: BigInt = s[st..i].parse().expect("ascii digits");
            out.push((Tok::Int(n), st));
        } else if c == b'.' {
            return err(ParseErrorKind::DecimalLiteral, i);
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[st..i].to_string()), st));
        } else if b"+-*/^()".contains(&c) {
            out.push((Tok::Op(c as char), i));
            i += 1;
        } else {
            let ch = s[i..].chars().next().expect("in bounds");
            return err(ParseErrorKind::UnexpectedChar(ch), i);
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    kind: Kind,
    bindings: &'a Bindings,
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        match self.toks.get(self.at) {
            None => err(ParseErrorKind::UnexpectedEnd, self.end),
            Some((t, p)) => {
                let text = match t {
                    Tok::Int(n) => format!("number {n}"),
                    Tok::Ident(s) => format!("identifier {s:?}"),
                    Tok::Op(c) => format!("{c:?}"),
                };
                err(ParseErrorKind::UnexpectedToken(text), *p)
            }
        }
    }

    fn check_degree(&self, p: BiPoly, pos: usize) -> Result<BiPoly, ParseError> {
        if p.total_degree() > MAX_DEGREE {
            return err(ParseErrorKind::DegreeTooLarge, pos);
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return err(ParseErrorKind::TooDeep, self.pos());
        }
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            if self.eat('*') {
                let rhs = self.unary()?;
                if acc.total_degree() + rhs.total_degree() > MAX_DEGREE {
                    return err(ParseErrorKind::DegreeTooLarge, pos);
                }
                acc = &acc * &rhs;
            } else if self.eat('/') {
                let dpos = self.pos();
                let rhs = self.unary()?;
                if rhs.is_zero() {
                    return err(ParseErrorKind::DivisionByZero, dpos);
                }
                if rhs.total_degree() > 0 {
                    return err(ParseErrorKind::NonConstantDivisor, dpos);
                }
                let c = rhs.coeff(0, 0);
                acc = acc.scale(&(Rat::one() / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return err(ParseErrorKind::TooDeep, self.pos());
        }
        let r = if self.eat('-') {
            self.unary().map(|p| -p)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        };
        self.depth -= 1;
        r
    }

    fn power(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let e = u32::try_from(&n)
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or(ParseError {
                        kind: ParseErrorKind::ExponentTooLarge,
                        pos,
                    })?;
                if (base.total_degree() as u64) * (e as u64) > MAX_DEGREE as u64 {
                    return err(ParseErrorKind::DegreeTooLarge, pos);
                }
                let r = pow(&base, e);
                self.check_degree(r, pos)
            }
            Some(Tok::Op('-')) => err(ParseErrorKind::NegativeExponent, pos),
            _ => self.unexpected(),
        }
    }

    fn atom(&mut self) -> Result<BiPoly, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(BiPoly::constant(Rat::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                match (self.kind, name.as_str()) {
                    (Kind::Bi, "X") | (Kind::Uni, "t") => Ok(BiPoly::x()),
                    (Kind::Bi, "Y") => Ok(BiPoly::y()),
                    _ => match self.bindings.get(&name) {
                        Some(q) => Ok(BiPoly::constant(q.clone())),
                        None => err(ParseErrorKind::UnboundIdentifier(name), pos),
                    },
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.unexpected();
                }
                Ok(e)
            }
            _ => self.unexpected(),
        }
    }
}

fn pow(base: &BiPoly, mut e: u32) -> BiPoly {
    let mut acc = BiPoly::constant(Rat::one());
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

fn parse_raw(text: &str, kind: Kind, bindings: &Bindings) -> Result<BiPoly, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        kind,
        bindings,
        depth: 0,
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.unexpected();
    }
    Ok(e)
}

pub fn parse_bi(text: &str, bindings: &Bindings) -> Result<BiPoly, ParseError> {
    parse_raw(text, Kind::Bi, bindings)
}

pub fn parse_uni(text: &str, bindings: &Bindings) -> Result<UniPoly, ParseError> {
    let p = parse_raw(text, Kind::Uni, bindings)?;
    let mut coeffs = vec![Rat::zero(); p.total_degree() as usize + 1];
    for ((i, _), c) in p.terms() {
        coeffs[*i as usize] = c.clone();
    }
    Ok(UniPoly::new(coeffs))
}

fn parse_uint(s: &str, pos: usize) -> Result<BigInt, ParseError> {
    let t = s.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) || t.len() > MAX_LITERAL_DIGITS {
        if t.contains('.') {
            return err(ParseErrorKind::DecimalLiteral, pos);
        }
        return err(ParseErrorKind::InvalidRational, pos);
    }
    Ok(t.parse().expect("ascii digits"))
}

/// `[-]p[/q]` with `q ≠ 0`.
pub fn parse_rational(text: &str) -> Result<Rat, ParseError> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let q = match body.split_once('/') {
        None => Rat::from_integer(parse_uint(body, 0)?),
        Some((n, d)) => {
            let n = parse_uint(n, 0)?;
            let d = parse_uint(d, 0)?;
            if d.is_zero() {
                return err(ParseErrorKind::DivisionByZero, 0);
            }
            Rat::new(n, d)
        }
    };
    Ok(if neg { -q } else { q })
}

/// `name=p/q`.
pub fn parse_binding(text: &str) -> Result<(String, Rat), ParseError> {
    let Some((name, value)) = text.split_once('=') else {
        return err(ParseErrorKind::InvalidBinding, 0);
    };
    let name = name.trim();
    let ok = name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(name, "X" | "Y" | "t");
    if !ok {
        return err(ParseErrorKind::InvalidBinding, 0);
    }
    let q = parse_rational(value).map_err(|e| ParseError {
        pos: e.pos + name.len() + 1,
        ..e
    })?;
    Ok((name.to_string(), q))
}

/// `r/s` with positive integers, reduced to lowest terms only by the caller.
pub fn parse_beta(text: &str) -> Result<(u32, u32), ParseError> {
    let bad = || ParseError {
        kind: ParseErrorKind::InvalidBeta,
        pos: 0,
    };
    let (r, s) = text.trim().split_once('/').ok_or_else(bad)?;
    let num = |x: &str| {
        let x = x.trim();
        if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        x.parse::<u32>().ok().filter(|v| *v > 0).ok_or_else(bad)
    };
    Ok((num(r)?, num(s)?))
}

/// Whether `r/s` is already reduced.
pub fn beta_is_reduced(r: u32, s: u32) -> bool {
    r.gcd(&s) == 1
}
