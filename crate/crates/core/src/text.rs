//! Text grammar for indices, words and polynomials.
//!
//! Indices are comma-separated positive integers in square brackets, e.g.
//! `[3,1,2]`; the empty index is `[]`. Triple letters are `(p,q,r)` and
//! triple words are `[(1,0,0),(0,1,0)]`. A polynomial is a comma-separated
//! list of `word:coeff` entries with the coefficient rendered `p/q` (the
//! `/q` omitted when the denominator is one), terms sorted by depth and
//! then lexicographically; the zero polynomial is `0`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::index::{Index, ZPoly, ZWord};
use crate::mletter::{MLetter, MPoly, MWord};
use crate::rational::{render, Rational};
use crate::series::TruncatedSeries;
use crate::word::Word;

pub fn render_index(idx: &Index) -> String {
    idx.to_string()
}

pub fn render_zword(w: &ZWord) -> String {
    let inner: Vec<String> = w.letters().iter().map(|e| e.to_string()).collect();
    format!("[{}]", inner.join(","))
}

pub fn render_mword(w: &MWord) -> String {
    let inner: Vec<String> = w.letters().iter().map(|l| l.to_string()).collect();
    format!("[{}]", inner.join(","))
}

pub fn render_zpoly(p: &ZPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p
        .iter()
        .map(|(w, c)| format!("{}:{}", render_zword(w), render(c)))
        .collect();
    parts.join(", ")
}

/// `bound=W; <terms>` with the term list in the polynomial grammar.
pub fn render_series(s: &TruncatedSeries) -> String {
    format!("bound={}; {}", s.bound(), render_mpoly(&s.to_poly()))
}

pub fn parse_series(input: &str) -> Result<TruncatedSeries> {
    let rest = input.trim_start();
    let consumed = input.len() - rest.len();
    let rest = rest.strip_prefix("bound=").ok_or(Error::Parse {
        pos: consumed,
        msg: "expected 'bound='".into(),
    })?;
    let (bound_text, poly_text) = rest.split_once(';').ok_or(Error::Parse {
        pos: input.len(),
        msg: "expected ';' after the bound".into(),
    })?;
    let bound: u32 = bound_text.trim().parse().map_err(|e| Error::Parse {
        pos: consumed + 6,
        msg: format!("bad bound: {e}"),
    })?;
    let poly = parse_mpoly(poly_text.trim())?;
    for (w, _) in poly.iter() {
        if crate::mletter::total_weight(w) > bound {
            return Err(Error::Domain(format!(
                "term {} exceeds the stated bound {bound}",
                render_mword(w)
            )));
        }
    }
    Ok(TruncatedSeries::from_poly(bound, &poly))
}

pub fn render_mpoly(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p
        .iter()
        .map(|(w, c)| format!("{}:{}", render_mword(w), render(c)))
        .collect();
    parts.join(", ")
}

struct Scanner<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner { input, pos: 0 }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|e| self.error(format!("bad integer: {e}")))
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some('/') {
            self.pos += 1;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        if self.pos == start {
            return Err(self.error("expected a rational"));
        }
        Rational::from_str(&self.input[start..self.pos])
            .map_err(|e| self.error(format!("bad rational: {e}")))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.error("trailing input"))
        }
    }

    fn index(&mut self) -> Result<Index> {
        self.expect('[')?;
        let mut entries = Vec::new();
        if !self.eat(']') {
            loop {
                entries.push(self.integer()?);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Index::new(entries).map_err(|e| self.error(e.to_string()))
    }

    fn mletter(&mut self) -> Result<MLetter> {
        self.expect('(')?;
        let a = self.integer()?;
        self.expect(',')?;
        let b = self.integer()?;
        self.expect(',')?;
        let c = self.integer()?;
        self.expect(')')?;
        let to_u32 = |v: u64, s: &Self| {
            u32::try_from(v).map_err(|_| s.error("letter component out of range"))
        };
        MLetter::new(to_u32(a, self)?, to_u32(b, self)?, to_u32(c, self)?)
            .map_err(|e| self.error(e.to_string()))
    }

    fn mword(&mut self) -> Result<MWord> {
        self.expect('[')?;
        let mut letters = Vec::new();
        if !self.eat(']') {
            loop {
                letters.push(self.mletter()?);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(Word::new(letters))
    }
}

pub fn parse_index(input: &str) -> Result<Index> {
    let mut s = Scanner::new(input);
    let idx = s.index()?;
    s.finish()?;
    Ok(idx)
}

pub fn parse_zpoly(input: &str) -> Result<ZPoly> {
    let mut s = Scanner::new(input);
    s.skip_ws();
    let mut poly = ZPoly::zero();
    if s.peek() == Some('0') {
        s.pos += 1;
        s.finish()?;
        return Ok(poly);
    }
    loop {
        let idx = s.index()?;
        s.expect(':')?;
        let coeff = s.rational()?;
        poly.add_term(idx.word(), &coeff);
        s.skip_ws();
        if s.pos == s.input.len() {
            break;
        }
        s.expect(',')?;
    }
    Ok(poly)
}

pub fn parse_mword(input: &str) -> Result<MWord> {
    let mut s = Scanner::new(input);
    let w = s.mword()?;
    s.finish()?;
    Ok(w)
}

pub fn parse_mpoly(input: &str) -> Result<MPoly> {
    let mut s = Scanner::new(input);
    s.skip_ws();
    let mut poly = MPoly::zero();
    if s.peek() == Some('0') {
        s.pos += 1;
        s.finish()?;
        return Ok(poly);
    }
    loop {
        let w = s.mword()?;
        s.expect(':')?;
        let coeff = s.rational()?;
        poly.add_term(w, &coeff);
        s.skip_ws();
        if s.pos == s.input.len() {
            break;
        }
        s.expect(',')?;
    }
    Ok(poly)
}
