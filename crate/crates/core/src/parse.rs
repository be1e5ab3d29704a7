//! Text input for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' nat)?
//! coeff  := nat | nat '/' nat
//! var    := letter (letter|digit)*
//! ```
//! Whitespace is insignificant. Columns in errors are 1-based.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldPrime, Fp};
use crate::poly::Polynomial;
use crate::ring::Ring;

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { column: self.pos + 1, message: message.into() })
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Digits reduced modulo `p`, plus the raw value when it fits in a u64.
    fn nat(&mut self, field: FieldPrime) -> Result<(Fp, Option<u64>)> {
        self.skip_ws();
        let start = self.pos;
        let mut residue = 0u64;
        let mut raw: Option<u64> = Some(0);
        let p = field.modulus() as u64;
        while let Some(&c) = self.text.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            let d = (c - b'0') as u64;
            residue = (residue * 10 + d) % p;
            raw = raw.and_then(|r| r.checked_mul(10)).and_then(|r| r.checked_add(d));
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        Ok((field.element(residue), raw))
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.text.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return None,
        }
        while self.text.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.text[start..self.pos]).expect("ascii"))
    }
}

fn factor(cur: &mut Cursor<'_>, ring: &Arc<Ring>, exps: &mut [u32]) -> Result<()> {
    cur.skip_ws();
    let start = cur.pos;
    let Some(name) = cur.ident() else {
        return cur.err("expected a variable");
    };
    let Some(i) = ring.var_index(name) else {
        return Err(Error::Parse { column: start + 1, message: format!("unknown variable {name:?}") });
    };
    let mut e = 1u64;
    if cur.eat(b'^') {
        let (_, raw) = cur.nat(ring.field())?;
        e = match raw {
            Some(v) if v <= u16::MAX as u64 => v,
            _ => return cur.err("exponent too large"),
        };
    }
    exps[i] += e as u32;
    Ok(())
}

fn term(cur: &mut Cursor<'_>, ring: &Arc<Ring>) -> Result<Polynomial> {
    let field = ring.field();
    let mut coeff = Fp::ONE;
    let mut exps = vec![0u32; ring.nvars()];
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let (num, _) = cur.nat(field)?;
            coeff = num;
            if cur.eat(b'/') {
                let (den, _) = cur.nat(field)?;
                if den.is_zero() {
                    return cur.err(format!("denominator divisible by the characteristic {field}"));
                }
                coeff = field.div(num, den)?;
            }
        }
        Some(c) if c.is_ascii_alphabetic() => factor(cur, ring, &mut exps)?,
        Some(_) => return cur.err("expected a term"),
        None => return cur.err("unexpected end of input"),
    }
    while cur.eat(b'*') {
        factor(cur, ring, &mut exps)?;
    }
    let m = crate::monomial::Monomial::new(&exps)
        .map_err(|_| Error::Parse { column: cur.pos + 1, message: "exponent too large".into() })?;
    Ok(Polynomial::monomial(ring, m, coeff))
}

/// Parse `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut cur = Cursor { text: text.as_bytes(), pos: 0 };
    let mut acc = Polynomial::zero(ring);
    let mut negate = false;
    if cur.eat(b'-') {
        negate = true;
    } else {
        cur.eat(b'+');
    }
    loop {
        let t = term(&mut cur, ring)?;
        acc = if negate { acc.sub(&t)? } else { acc.add(&t)? };
        match cur.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(c) => return cur.err(format!("unexpected character {:?}", c as char)),
        }
        cur.pos += 1;
    }
    Ok(acc)
}

/// Parse a comma-separated generator list. The single token `0` denotes the
/// zero ideal and yields an empty list.
pub fn parse_generators(text: &str, ring: &Arc<Ring>) -> Result<Vec<Polynomial>> {
    if text.trim() == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let p = parse_polynomial(piece, ring).map_err(|e| match e {
            Error::Parse { column, message } => Error::Parse { column: column + offset, message },
            other => other,
        })?;
        offset += piece.len() + 1;
        out.push(p);
    }
    Ok(out)
}
