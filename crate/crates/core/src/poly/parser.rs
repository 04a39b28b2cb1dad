//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//!   expr   := [sign] term { sign term }
//!   term   := factor { ['*'] factor }        (juxtaposition multiplies)
//!   factor := base ['^' natural]
//!   base   := rational | identifier | '(' expr ')'
//! ```
//!
//! `rational` is an integer literal optionally followed by `/ integer`; the
//! slash is only part of a literal (so `x/2` is rejected — write `1/2x`).
//! Identifiers are matched against the caller's variable list; anything else
//! is an error with a byte position.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Polynomial, Scalar};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
#[error("{message} at byte {position}")]
pub struct ParseError {
    message: String,
    position: usize,
}

impl ParseError {
    fn new(message: impl Into<String>, position: usize) -> Self {
        ParseError { message: message.into(), position }
    }

    pub fn message(&self) -> &str {
        &self.message
    }

    pub fn position(&self) -> usize {
        self.position
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

/// Parse `text` as a polynomial in the given variables (in that order).
pub fn parse_polynomial(text: &str, vars: &[&str]) -> Result<Polynomial, ParseError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0, vars };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(ParseError::new("unexpected trailing input", p.pos));
    }
    Ok(poly)
}

/// Scan `text` for identifiers and return them in first-appearance order.
/// Useful for CLI input where the variable list is implicit.
pub fn infer_variables(text: &str) -> Vec<String> {
    let bytes = text.as_bytes();
    let mut seen: Vec<String> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() || bytes[i] == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = std::str::from_utf8(&bytes[start..i]).expect("ascii").to_string();
            if !seen.contains(&name) {
                seen.push(name);
            }
        } else {
            i += 1;
        }
    }
    seen
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let nvars = self.vars.len();
        let mut acc = Polynomial::zero(nvars);
        let mut sign = 1i64;
        self.skip_ws();
        if let Some(c) = self.peek() {
            if c == b'+' || c == b'-' {
                self.pos += 1;
                if c == b'-' {
                    sign = -1;
                }
            }
        }
        loop {
            let term = self.term()?;
            acc = if sign == 1 { &acc + &term } else { &acc - &term };
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c)
                    if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' =>
                {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.natural()?.ok_or_else(|| {
                ParseError::new("expected a natural number exponent after '^'", at)
            })?;
            let e32 = u32::try_from(&e)
                .map_err(|_| ParseError::new("exponent too large", at))?;
            return Ok(base.pow(e32));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let nvars = self.vars.len();
        let at = self.pos;
        match self.peek() {
            None => Err(ParseError::new("unexpected end of input", at)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(ParseError::new("expected ')'", self.pos))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.natural()?.expect("digit lookahead");
                // a '/' here continues the literal: integer / integer
                let mut save = self.pos;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let dat = self.pos;
                    let denom = self.natural()?.ok_or_else(|| {
                        ParseError::new("expected an integer denominator after '/'", dat)
                    })?;
                    if denom.is_zero() {
                        return Err(ParseError::new("division by zero in coefficient", at));
                    }
                    save = self.pos;
                    self.pos = save;
                    return Ok(Polynomial::constant(nvars, Scalar::new(numer, denom)));
                }
                self.pos = save;
                Ok(Polynomial::constant(nvars, Scalar::from(numer)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::variable(nvars, i).expect("index in range")),
                    None => Err(ParseError::new(
                        format!(
                            "unknown variable `{name}` (expected one of: {})",
                            self.vars.join(", ")
                        ),
                        start,
                    )),
                }
            }
            Some(c) => Err(ParseError::new(
                format!("unexpected character `{}`", c as char),
                at,
            )),
        }
    }

    fn natural(&mut self) -> Result<Option<BigInt>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("digits");
        Ok(Some(text.parse::<BigInt>().expect("digits parse")))
    }
}
