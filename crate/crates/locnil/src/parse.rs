//! Text forms for the CLI: module descriptions (`Z^2 + Z/4 + Z/6` or
//! `pres(2; 2,0; 0,3)`), integer matrices (`2,4;6,8`) and polynomials
//! (`1 + 2*x + 3*x^2`). Parsers report byte positions on failure and every
//! parse canonicalizes, so `render(parse(s))` is a fixed point.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::fgmod::{from_presentation, FgModule};
use crate::matrix::IntMatrix;
use crate::poly::Poly;
use crate::ring::RingDesc;
use crate::{Error, Result};

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Cursor over the input with position tracking; whitespace-insensitive.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, expected: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == expected => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(err(self.pos, format!("expected `{}`, found `{}`", expected, c))),
            None => Err(err(self.pos, format!("expected `{}`, found end of input", expected))),
        }
    }

    fn try_eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.pos += expected.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let mut end = self.pos;
        let bytes = self.text.as_bytes();
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        let slice = &self.text[start..end];
        let value: BigInt = slice
            .parse()
            .map_err(|_| err(start, "expected an integer"))?;
        self.pos = end;
        Ok(value)
    }

    fn done(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(err(self.pos, "trailing input"))
        }
    }
}

/// Parse a module description over the given ring. Accepts a sum of
/// `Z`, `Z^r`, `Z/d` terms, the literal `0`, or a presentation
/// `pres(generators; relation row; ...)`; the result is canonical.
pub fn parse_module(ring: &RingDesc, text: &str) -> Result<FgModule> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if cur.text[cur.pos..].starts_with("pres") {
        cur.pos += 4;
        let m = parse_presentation(ring, &mut cur)?;
        cur.done()?;
        return Ok(m);
    }
    if cur.try_eat('0') {
        cur.done()?;
        return Ok(FgModule::zero(ring.clone()));
    }
    let mut free_rank = 0usize;
    let mut torsion: Vec<BigInt> = Vec::new();
    loop {
        cur.skip_ws();
        let pos = cur.pos;
        cur.eat('Z')
            .map_err(|_| err(pos, "expected a term `Z`, `Z^r` or `Z/d`"))?;
        if cur.try_eat('^') {
            let r = cur.integer()?;
            let r: usize = (&r)
                .try_into()
                .map_err(|_| err(pos, "free rank must be a small nonnegative integer"))?;
            free_rank += r;
        } else if cur.try_eat('/') {
            let pos_d = cur.pos;
            let d = cur.integer()?;
            if d < BigInt::from(2) {
                return Err(err(pos_d, "torsion coefficient must be >= 2"));
            }
            torsion.push(d);
        } else {
            free_rank += 1;
        }
        // both `+` and `x` join terms, so canonical renderings parse back
        if !cur.try_eat('+') && !cur.try_eat('x') {
            break;
        }
    }
    cur.done()?;
    FgModule::from_invariants(ring.clone(), free_rank, &torsion)
}

fn parse_presentation(ring: &RingDesc, cur: &mut Cursor) -> Result<FgModule> {
    cur.eat('(')?;
    let pos = cur.pos;
    let g = cur.integer()?;
    let gens: usize = (&g)
        .try_into()
        .map_err(|_| err(pos, "generator count must be a small nonnegative integer"))?;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    while cur.try_eat(';') {
        let mut row = Vec::new();
        loop {
            row.push(cur.integer()?);
            if !cur.try_eat(',') {
                break;
            }
        }
        if row.len() != gens {
            return Err(err(
                cur.pos,
                format!("relation row has {} entries, expected {}", row.len(), gens),
            ));
        }
        rows.push(row);
    }
    cur.eat(')')?;
    let rels = IntMatrix::from_rows(&rows, gens)
        .map_err(|e| err(cur.pos, e.to_string()))?;
    Ok(from_presentation(ring.clone(), gens, &rels)?.0)
}

/// Canonical rendering: the iso class string, which `parse_module` accepts.
pub fn render_module(m: &FgModule) -> String {
    m.iso_class()
}

/// Parse a rectangular integer matrix: rows separated by `;`, entries by `,`.
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let mut cur = Cursor::new(text);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    loop {
        let mut row = Vec::new();
        loop {
            row.push(cur.integer()?);
            if !cur.try_eat(',') {
                break;
            }
        }
        if let Some(prev) = rows.first() {
            if row.len() != prev.len() {
                return Err(err(
                    cur.pos,
                    format!("row has {} entries, expected {}", row.len(), prev.len()),
                ));
            }
        }
        rows.push(row);
        if !cur.try_eat(';') {
            break;
        }
    }
    cur.done()?;
    let cols = rows[0].len();
    IntMatrix::from_rows(&rows, cols)
}

/// Parse a polynomial over `Z/n` written as a sum of `c`, `c*x`, `x`,
/// `c*x^k`, `x^k` terms, e.g. `1 + 2*x + 3*x^2`.
pub fn parse_poly(modulus: &BigInt, text: &str) -> Result<Poly> {
    let mut cur = Cursor::new(text);
    let mut coeffs: Vec<BigInt> = Vec::new();
    loop {
        let (coeff, degree) = parse_poly_term(&mut cur)?;
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += coeff;
        if !cur.try_eat('+') {
            break;
        }
    }
    cur.done()?;
    Poly::new(modulus.clone(), coeffs)
}

fn parse_poly_term(cur: &mut Cursor) -> Result<(BigInt, usize)> {
    let pos = cur.pos;
    let coeff = if matches!(cur.peek(), Some('x')) {
        BigInt::from(1)
    } else {
        let c = cur.integer()?;
        if !cur.try_eat('*') {
            return Ok((c, 0));
        }
        c
    };
    cur.eat('x')
        .map_err(|_| err(pos, "expected `x` after `*`"))?;
    let degree = if cur.try_eat('^') {
        let d = cur.integer()?;
        (&d).try_into()
            .map_err(|_| err(pos, "exponent must be a small nonnegative integer"))?
    } else {
        1
    };
    Ok((coeff, degree))
}
