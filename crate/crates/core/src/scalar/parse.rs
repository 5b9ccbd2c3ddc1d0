//! Recursive-descent parser for scalar text: integers, `q`, `v`, `+ - * / ^`
//! and parentheses. `q` abbreviates `v^2`.

use super::ratfunc::RationalFunctionV;
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    s: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    pub(crate) fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let n: i64 = t.parse().map_err(|_| self.err("integer overflow"))?;
        Ok(if neg { -n } else { n })
    }

    pub(crate) fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            if self.pos == start && self.s[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }
}

pub fn parse_scalar(s: &str) -> Result<RationalFunctionV> {
    let mut c = Cursor::new(s);
    let x = scalar_expr(&mut c)?;
    if !c.at_end() {
        return Err(c.err("trailing input"));
    }
    Ok(x)
}

pub(crate) fn scalar_expr(c: &mut Cursor) -> Result<RationalFunctionV> {
    let mut acc = scalar_term(c)?;
    loop {
        if c.eat(b'+') {
            acc = &acc + &scalar_term(c)?;
        } else if c.peek() == Some(b'-') {
            c.pos += 1;
            acc = &acc - &scalar_term(c)?;
        } else {
            return Ok(acc);
        }
    }
}

fn scalar_term(c: &mut Cursor) -> Result<RationalFunctionV> {
    let mut acc = scalar_unary(c)?;
    loop {
        if c.eat(b'*') {
            acc = &acc * &scalar_unary(c)?;
        } else if c.eat(b'/') {
            acc = (&acc / &scalar_unary(c)?)?;
        } else {
            return Ok(acc);
        }
    }
}

fn scalar_unary(c: &mut Cursor) -> Result<RationalFunctionV> {
    if c.peek() == Some(b'-') {
        c.pos += 1;
        return Ok(-scalar_unary(c)?);
    }
    let base = scalar_atom(c)?;
    if c.eat(b'^') {
        let e = if c.eat(b'(') {
            let e = c.integer()?;
            c.expect(b')')?;
            e
        } else {
            c.integer()?
        };
        return base.pow(e);
    }
    Ok(base)
}

fn scalar_atom(c: &mut Cursor) -> Result<RationalFunctionV> {
    match c.peek() {
        Some(b'(') => {
            c.pos += 1;
            let x = scalar_expr(c)?;
            c.expect(b')')?;
            Ok(x)
        }
        Some(d) if d.is_ascii_digit() => Ok(RationalFunctionV::from_int(c.integer()?)),
        Some(b'q') => {
            c.pos += 1;
            Ok(RationalFunctionV::q_pow(1))
        }
        Some(b'v') => {
            c.pos += 1;
            Ok(RationalFunctionV::v())
        }
        _ => Err(c.err("expected scalar")),
    }
}
