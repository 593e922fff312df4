//! The triple-indexed alphabet: nonzero triples of nonnegative integers,
//! with componentwise addition. Words over this alphabet carry a weight
//! (componentwise letter sum), a depth, and a balance structure used by the
//! series identities: a word is *good* when the running sums of `a - b`
//! stay in {0, 1} and return to 0, and a letter is *great* when `|a - b| <= 1`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::index::{ZPoly, ZWord};
use crate::word::{Letter, Poly, Word};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MLetter {
    a: u32,
    b: u32,
    c: u32,
}

pub type MWord = Word<MLetter>;
pub type MPoly = Poly<MLetter>;

pub const E1: MLetter = MLetter { a: 1, b: 0, c: 0 };
pub const E2: MLetter = MLetter { a: 0, b: 1, c: 0 };
pub const E3: MLetter = MLetter { a: 0, b: 0, c: 1 };

impl MLetter {
    /// The zero triple is not a letter.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 && b == 0 && c == 0 {
            return Err(Error::Domain("(0,0,0) is not a letter".into()));
        }
        Ok(MLetter { a, b, c })
    }

    pub fn parts(&self) -> (u32, u32, u32) {
        (self.a, self.b, self.c)
    }

    /// Sum of the three components; always >= 1.
    pub fn total(&self) -> u32 {
        self.a + self.b + self.c
    }

    /// Third component (the "dot e3" statistic).
    pub fn e3(&self) -> u32 {
        self.c
    }

    /// First minus second component.
    pub fn balance(&self) -> i64 {
        i64::from(self.a) - i64::from(self.b)
    }

    /// `|a - b| <= 1`.
    pub fn is_great(&self) -> bool {
        self.balance().abs() <= 1
    }

    /// Member of the diagonal family at level `k`: `(b, b, k)` with the zero
    /// triple excluded.
    pub fn in_level(&self, k: u32) -> bool {
        self.a == self.b && self.c == k
    }

    /// Member of the support of the closed-form series:
    /// `(a,a,0)` with `a >= 1`, `(a+1,a,0)`, `(a,a+1,0)`, or `(a,a,1)`.
    pub fn in_n(&self) -> bool {
        match (self.a, self.b, self.c) {
            (a, b, 0) => (a == b && a >= 1) || a.abs_diff(b) == 1,
            (a, b, 1) => a == b,
            _ => false,
        }
    }

    /// The binomial `C(a+b+c, c)`: the number of words over {e1, e2, e3}
    /// whose consecutive-block sums rebuild this letter under the goodness
    /// constraint.
    pub fn multiplicity(&self) -> BigInt {
        num_integer::binomial(BigInt::from(self.total()), BigInt::from(self.c))
    }
}

impl Letter for MLetter {
    fn merge(&self, other: &Self) -> Self {
        MLetter {
            a: self.a + other.a,
            b: self.b + other.b,
            c: self.c + other.c,
        }
    }
}

impl std::fmt::Display for MLetter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Componentwise letter sum; (0,0,0) for the empty word.
pub fn weight(w: &MWord) -> (u32, u32, u32) {
    w.letters().iter().fold((0, 0, 0), |(a, b, c), l| {
        (a + l.a, b + l.b, c + l.c)
    })
}

/// Weight contracted with (1,1,1); every letter contributes at least 1.
pub fn total_weight(w: &MWord) -> u32 {
    w.letters().iter().map(|l| l.total()).sum()
}

/// Prefix sums of `a - b` all in {0, 1} and the full sum 0.
pub fn is_good(w: &MWord) -> bool {
    let mut run = 0i64;
    for l in w.letters() {
        run += l.balance();
        if run != 0 && run != 1 {
            return false;
        }
    }
    run == 0
}

/// Number of letters with third component exactly 1. Defined only for words
/// over the diagonal levels 1 and 2.
pub fn char_count(w: &MWord) -> Result<usize> {
    for l in w.letters() {
        if !(l.in_level(1) || l.in_level(2)) {
            return Err(Error::Domain(format!(
                "char_count: letter {l} is outside the diagonal levels 1 and 2"
            )));
        }
    }
    Ok(w.letters().iter().filter(|l| l.e3() == 1).count())
}

/// The algebra homomorphism to the z-word algebra determined by
/// `(p,q,r) -> z_(ap+bq+cr)`; requires `a, b, c >= 1` so images stay positive.
pub fn hom_word(w: &MWord, a: u64, b: u64, c: u64) -> ZWord {
    assert!(a >= 1 && b >= 1 && c >= 1);
    Word::new(
        w.letters()
            .iter()
            .map(|l| a * u64::from(l.a) + b * u64::from(l.b) + c * u64::from(l.c))
            .collect(),
    )
}

/// Letterwise image of a polynomial under [`hom_word`].
pub fn hom_poly(p: &MPoly, a: u64, b: u64, c: u64) -> ZPoly {
    let mut out = ZPoly::zero();
    for (w, coeff) in p.iter() {
        out.add_term(hom_word(w, a, b, c), coeff);
    }
    out
}
