//! The two-letter presentation of the z-word algebra.
//!
//! Words over {x, y} multiply by concatenation; the z-basis embeds via
//! `z_a -> x^(a-1) y`, so a monomial lies in the z-span exactly when it is
//! empty or ends in y. The automorphism `phi` fixes x and sends y to x + y;
//! composing it with the embedding gives a second route to the block-sum
//! transform: `d(w y) = phi(w) y`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::index::{Index, ZPoly};
use crate::rational::Rational;
use crate::word::Word;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum XyLetter {
    X,
    Y,
}

/// A monomial in the two-letter algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XyWord(Vec<XyLetter>);

impl XyWord {
    pub fn new(letters: Vec<XyLetter>) -> Self {
        XyWord(letters)
    }

    pub fn empty() -> Self {
        XyWord(Vec::new())
    }

    pub fn letters(&self) -> &[XyLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        XyWord(v)
    }
}

impl std::fmt::Display for XyWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            match l {
                XyLetter::X => write!(f, "x")?,
                XyLetter::Y => write!(f, "y")?,
            }
        }
        Ok(())
    }
}

impl PartialOrd for XyWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XyWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Q-linear combination of xy-monomials (concatenation algebra).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XyPoly {
    terms: BTreeMap<XyWord, Rational>,
}

impl XyPoly {
    pub fn zero() -> Self {
        XyPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        XyPoly::from_word(XyWord::empty())
    }

    pub fn from_word(w: XyWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Rational::from_integer(1.into()));
        XyPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&XyWord, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: XyWord, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn concat_mul(&self, other: &Self) -> Self {
        let mut out = XyPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }
}

/// The substitution x -> x, y -> x + y, extended multiplicatively.
pub fn phi(p: &XyPoly) -> XyPoly {
    let x = XyPoly::from_word(XyWord::new(vec![XyLetter::X]));
    let x_plus_y = {
        let mut s = x.clone();
        s.add_term(XyWord::new(vec![XyLetter::Y]), &crate::rational::rat(1));
        s
    };
    let mut out = XyPoly::zero();
    for (w, c) in p.iter() {
        let mut img = XyPoly::one();
        for l in w.letters() {
            img = img.concat_mul(match l {
                XyLetter::X => &x,
                XyLetter::Y => &x_plus_y,
            });
        }
        let mut scaled = XyPoly::zero();
        for (iw, ic) in img.iter() {
            scaled.add_term(iw.clone(), &(ic * c));
        }
        out = out.add(&scaled);
    }
    out
}

/// `z_a -> x^(a-1) y`, concatenated over the index.
pub fn zword_to_xy(idx: &Index) -> XyWord {
    let mut letters = Vec::new();
    for &a in idx.entries() {
        for _ in 0..(a - 1) {
            letters.push(XyLetter::X);
        }
        letters.push(XyLetter::Y);
    }
    XyWord(letters)
}

/// Inverse of the embedding on the z-span; errors on any monomial that is
/// nonempty and does not end in y.
pub fn xy_to_zpoly(p: &XyPoly) -> Result<ZPoly> {
    let mut out = ZPoly::zero();
    for (w, c) in p.iter() {
        if !w.is_empty() && *w.letters().last().unwrap() != XyLetter::Y {
            return Err(Error::NotZSpan(w.to_string()));
        }
        let mut entries = Vec::new();
        let mut run_of_x = 0u64;
        for l in w.letters() {
            match l {
                XyLetter::X => run_of_x += 1,
                XyLetter::Y => {
                    entries.push(run_of_x + 1);
                    run_of_x = 0;
                }
            }
        }
        out.add_term(Word::new(entries), c);
    }
    Ok(out)
}

/// The block-sum transform computed through the two-letter algebra:
/// embed, split off the final y, apply `phi`, reattach y, convert back.
pub fn d_via_phi(idx: &Index) -> ZPoly {
    if idx.is_empty() {
        return ZPoly::one();
    }
    let full = zword_to_xy(idx);
    let head = XyWord::new(full.letters()[..full.len() - 1].to_vec());
    let y = XyPoly::from_word(XyWord::new(vec![XyLetter::Y]));
    let img = phi(&XyPoly::from_word(head)).concat_mul(&y);
    xy_to_zpoly(&img).expect("phi image of a word ending in y stays in the z-span")
}
