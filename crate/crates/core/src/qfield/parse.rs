//! Recursive-descent parser for coefficient expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | 'q' | 't' | '(' expr ')'
//! ```

use super::CoefQT;
use crate::error::{Error, Result};
use num_bigint::BigInt;

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", b as char)))
        }
    }

    pub(crate) fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    pub(crate) fn small_integer(&mut self) -> Result<i64> {
        let n = self.integer()?;
        i64::try_from(n).map_err(|_| self.err("integer out of range"))
    }
}

pub(crate) fn parse_coef(s: &str) -> Result<CoefQT> {
    let mut cur = Cursor::new(s);
    let v = expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    Ok(v)
}

pub(crate) fn expr(cur: &mut Cursor) -> Result<CoefQT> {
    let mut acc = term(cur)?;
    loop {
        if cur.eat(b'+') {
            acc = acc + term(cur)?;
        } else if cur.eat(b'-') {
            acc = acc - term(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(cur: &mut Cursor) -> Result<CoefQT> {
    let mut acc = unary(cur)?;
    loop {
        if cur.eat(b'*') {
            acc = acc * unary(cur)?;
        } else if cur.eat(b'/') {
            let pos = cur.pos;
            let d = unary(cur)?;
            acc = acc.checked_div(&d).map_err(|_| Error::Parse {
                pos,
                msg: "division by zero".into(),
            })?;
        } else {
            return Ok(acc);
        }
    }
}

fn unary(cur: &mut Cursor) -> Result<CoefQT> {
    if cur.eat(b'-') {
        return Ok(-unary(cur)?);
    }
    if cur.eat(b'+') {
        return unary(cur);
    }
    power(cur)
}

pub(crate) fn power(cur: &mut Cursor) -> Result<CoefQT> {
    let base = atom(cur)?;
    if cur.eat(b'^') {
        let neg = cur.eat(b'-');
        let e = cur.small_integer()?;
        let e = if neg { -e } else { e };
        return base.pow(e).map_err(|_| cur.err("negative power of zero"));
    }
    Ok(base)
}

fn atom(cur: &mut Cursor) -> Result<CoefQT> {
    match cur.peek() {
        Some(b'q') => {
            cur.pos += 1;
            Ok(CoefQT::q())
        }
        Some(b't') => {
            cur.pos += 1;
            Ok(CoefQT::t())
        }
        Some(b'(') => {
            cur.pos += 1;
            let v = expr(cur)?;
            cur.expect(b')')?;
            Ok(v)
        }
        Some(b) if b.is_ascii_digit() => Ok(CoefQT::from_bigint(cur.integer()?)),
        _ => Err(cur.err("expected `q`, `t`, integer or `(`")),
    }
}
