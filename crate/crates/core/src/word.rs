//! Words and Q-linear combinations of words over an additive letter alphabet.
//!
//! The three structure maps are defined by the usual recursions and are
//! generic in the alphabet: the harmonic product `star` merges letters with
//! [`Letter::merge`], the interleaving product `sha` never merges, and the
//! block-sum transform `dmap` merges consecutive runs of letters. The same
//! code therefore serves both the z-basis algebra (letters: integers >= 1)
//! and the triple-indexed algebra (letters: nonzero triples).
//!
//! A polynomial is kept canonical at all times: a sorted term map with no
//! explicit zero coefficients, so equality of values is equality of maps.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Rational;

/// An alphabet element with a commutative, associative addition.
pub trait Letter: Clone + Eq + Ord + std::fmt::Debug {
    fn merge(&self, other: &Self) -> Self;
}

impl Letter for u64 {
    fn merge(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("letter sum overflow")
    }
}

/// A finite sequence of letters. The empty word is the multiplicative unit.
///
/// Words are ordered by depth first and then lexicographically; this is the
/// canonical term order used everywhere (serialization included).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word<L>(Vec<L>);

impl<L: Letter> Word<L> {
    pub fn new(letters: Vec<L>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(letter: L) -> Self {
        Word(vec![letter])
    }

    /// Depth: the number of letters.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    fn split_first(&self) -> Option<(&L, Word<L>)> {
        self.0.split_first().map(|(h, t)| (h, Word(t.to_vec())))
    }

    fn prepended(&self, letter: L) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }
}

impl<L: Ord> PartialOrd for Word<L> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Ord> Ord for Word<L> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A finite Q-linear combination of words, in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<L: Letter> {
    terms: BTreeMap<Word<L>, Rational>,
}

impl<L: Letter> Poly<L> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with coefficient one.
    pub fn one() -> Self {
        Poly::from_word(Word::empty())
    }

    pub fn from_word(w: Word<L>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Rational::from_integer(1.into()));
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word<L>) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word<L>, &Rational)> {
        self.terms.iter()
    }

    /// Adds `c * w`, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, w: Word<L>, c: &Rational) {
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

    pub fn add_scaled(&mut self, other: &Self, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c * scale));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer(1.into()));
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer((-1).into()));
        out
    }

    pub fn scale(&self, scale: &Rational) -> Self {
        let mut out = Poly::zero();
        out.add_scaled(self, scale);
        out
    }

    /// Concatenation (non-commutative) product.
    pub fn concat_mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    fn prepend(&self, letter: &L) -> Self {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.prepended(letter.clone()), c);
        }
        out
    }

    /// Harmonic product: bilinear extension of
    /// `aw * bw' = a(w * bw') + b(aw * w') + (a+b)(w * w')`.
    pub fn star(&self, other: &Self) -> Self {
        self.bilinear(other, star_words)
    }

    /// Interleaving product: bilinear extension of
    /// `aw sha bw' = a(w sha bw') + b(aw sha w')`.
    pub fn sha(&self, other: &Self) -> Self {
        self.bilinear(other, sha_words)
    }

    fn bilinear(&self, other: &Self, f: fn(&Word<L>, &Word<L>) -> Poly<L>) -> Self {
        let mut out = Poly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_scaled(&f(w1, w2), &(c1 * c2));
            }
        }
        out
    }

    /// Linear transform summing consecutive blocks of letters:
    /// each output word arises from one composition of the input word into
    /// nonempty runs, each run replaced by its merged letter.
    pub fn dmap(&self) -> Self {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&d_word(w), c);
        }
        out
    }
}

/// `star` on basis words.
pub fn star_words<L: Letter>(u: &Word<L>, v: &Word<L>) -> Poly<L> {
    match (u.split_first(), v.split_first()) {
        (None, _) => Poly::from_word(v.clone()),
        (_, None) => Poly::from_word(u.clone()),
        (Some((a, u_rest)), Some((b, v_rest))) => {
            let mut out = star_words(&u_rest, v).prepend(a);
            out.add_scaled(&star_words(u, &v_rest).prepend(b), &crate::rational::rat(1));
            out.add_scaled(
                &star_words(&u_rest, &v_rest).prepend(&a.merge(b)),
                &crate::rational::rat(1),
            );
            out
        }
    }
}

/// `sha` on basis words.
pub fn sha_words<L: Letter>(u: &Word<L>, v: &Word<L>) -> Poly<L> {
    match (u.split_first(), v.split_first()) {
        (None, _) => Poly::from_word(v.clone()),
        (_, None) => Poly::from_word(u.clone()),
        (Some((a, u_rest)), Some((b, v_rest))) => {
            let mut out = sha_words(&u_rest, v).prepend(a);
            out.add_scaled(&sha_words(u, &v_rest).prepend(b), &crate::rational::rat(1));
            out
        }
    }
}

/// `dmap` on a basis word.
pub fn d_word<L: Letter>(w: &Word<L>) -> Poly<L> {
    let n = w.depth();
    if n == 0 {
        return Poly::one();
    }
    let mut out = Poly::zero();
    let letters = w.letters();
    for first_block in 1..=n {
        let merged = letters[1..first_block]
            .iter()
            .fold(letters[0].clone(), |acc, l| acc.merge(l));
        let rest = Word::new(letters[first_block..].to_vec());
        out.add_scaled(&d_word(&rest).prepend(&merged), &crate::rational::rat(1));
    }
    out
}

/// Left fold of `sha` over a list; the empty fold is the unit.
pub fn bigsha<L: Letter>(polys: &[Poly<L>]) -> Poly<L> {
    polys.iter().fold(Poly::one(), |acc, p| acc.sha(p))
}

/// Left fold of `star` over a list; the empty fold is the unit.
pub fn bigstar<L: Letter>(polys: &[Poly<L>]) -> Poly<L> {
    polys.iter().fold(Poly::one(), |acc, p| acc.star(p))
}
