//! Parser for the `s[3,1]*(q+1) + s[2,2]*(-q^2)` grammar.
//!
//! ```text
//! sum    := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' factor) | ('/' coef-power))*
//! factor := basis '[' parts ']' | coef-power
//! ```
//!
//! Each term holds at most one basis element; a term without one is a
//! degree-0 constant. The literal `0` is the zero function.

use super::{Basis, SymFunc};
use crate::error::Result;
use crate::partition::Partition;
use crate::qfield::parse::{power, Cursor};
use crate::qfield::CoefQT;

pub(super) fn parse_symfunc(s: &str) -> Result<SymFunc> {
    let mut cur = Cursor::new(s);
    let mut terms: Vec<(Basis, Partition, CoefQT)> = Vec::new();
    let mut sign = 1;
    if cur.eat(b'-') {
        sign = -1;
    } else {
        cur.eat(b'+');
    }
    if cur.at_end() {
        return Err(cur.err("empty input"));
    }
    loop {
        let (b, p, c) = term(&mut cur)?;
        let c = if sign < 0 { -c } else { c };
        if !c.is_zero() {
            terms.push((b, p, c));
        }
        if cur.eat(b'+') {
            sign = 1;
        } else if cur.eat(b'-') {
            sign = -1;
        } else if cur.at_end() {
            break;
        } else {
            return Err(cur.err("expected `+`, `-` or end of input"));
        }
    }
    let Some(degree) = terms.first().map(|t| t.1.size()) else {
        return Ok(SymFunc::zero(0));
    };
    if let Some(bad) = terms.iter().find(|t| t.1.size() != degree) {
        return Err(cur.err(format!("term {} has degree {}, expected {degree}", bad.1, bad.1.size())));
    }
    let mut out = SymFunc::zero(degree);
    for basis in Basis::ALL {
        let group: Vec<_> = terms
            .iter()
            .filter(|t| t.0 == basis)
            .map(|t| (t.1.clone(), t.2.clone()))
            .collect();
        if !group.is_empty() {
            out += &SymFunc::from_expansion(basis, degree, group);
        }
    }
    Ok(out)
}

fn term(cur: &mut Cursor) -> Result<(Basis, Partition, CoefQT)> {
    let mut elem: Option<(Basis, Partition)> = None;
    let mut coef = CoefQT::one();
    loop {
        if let Some(b) = basis_elem(cur)? {
            if elem.is_some() {
                return Err(cur.err("a term may hold only one basis element"));
            }
            elem = Some(b);
        } else {
            coef = coef * power(cur)?;
        }
        while cur.eat(b'/') {
            let d = power(cur)?;
            coef = coef.checked_div(&d).map_err(|_| cur.err("division by zero"))?;
        }
        if !cur.eat(b'*') {
            break;
        }
    }
    let (b, p) = elem.unwrap_or((Basis::Schur, Partition::empty()));
    Ok((b, p, coef))
}

fn basis_elem(cur: &mut Cursor) -> Result<Option<(Basis, Partition)>> {
    let Some(c) = cur.peek() else {
        return Ok(None);
    };
    let Some(basis) = Basis::from_prefix(c as char) else {
        return Ok(None);
    };
    let save = cur.pos;
    cur.pos += 1;
    if !cur.eat(b'[') {
        cur.pos = save;
        return Ok(None);
    }
    let mut parts = Vec::new();
    if !cur.eat(b']') {
        loop {
            let n = cur.small_integer()?;
            parts.push(usize::try_from(n).map_err(|_| cur.err("negative part"))?);
            if cur.eat(b']') {
                break;
            }
            cur.expect(b',')?;
        }
    }
    let p = Partition::new(parts).map_err(|e| cur.err(e.to_string()))?;
    Ok(Some((basis, p)))
}
