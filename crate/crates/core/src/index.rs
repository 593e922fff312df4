//! Indices: finite sequences of positive integers, the basis labels of the
//! z-word algebra. An index is admissible when it is empty or its first
//! entry is at least 2 (the corresponding nested series converges).

use rand::Rng;

use crate::error::{Error, Result};
use crate::word::{Poly, Word};

pub type ZWord = Word<u64>;
pub type ZPoly = Poly<u64>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Index(Vec<u64>);

impl Index {
    /// Validates that every entry is >= 1.
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::Domain(format!(
                "index entries must be positive, got {entries:?}"
            )));
        }
        Ok(Index(entries))
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Sum of the entries.
    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.first().is_none_or(|&first| first >= 2)
    }

    pub fn word(&self) -> ZWord {
        Word::new(self.0.clone())
    }

    pub fn poly(&self) -> ZPoly {
        Poly::from_word(self.word())
    }

    pub fn from_word(w: &ZWord) -> Result<Self> {
        Index::new(w.letters().to_vec())
    }
}

impl std::fmt::Display for Index {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Uniform random index with `depth <= max_depth` and entries in
/// `1..=max_entry`; the empty index is included.
pub fn random_index<R: Rng>(rng: &mut R, max_depth: usize, max_entry: u64) -> Index {
    let depth = rng.gen_range(0..=max_depth);
    let entries = (0..depth).map(|_| rng.gen_range(1..=max_entry)).collect();
    Index(entries)
}

/// Random admissible index with depth in `1..=max_depth` and weight at most
/// `max_weight` (first entry 2..=max_entry, later entries 1..=max_entry).
pub fn random_admissible_index<R: Rng>(
    rng: &mut R,
    max_depth: usize,
    max_entry: u64,
    max_weight: u64,
) -> Index {
    loop {
        let depth = rng.gen_range(1..=max_depth);
        let mut entries = vec![rng.gen_range(2..=max_entry.max(2))];
        for _ in 1..depth {
            entries.push(rng.gen_range(1..=max_entry));
        }
        if entries.iter().sum::<u64>() <= max_weight {
            return Index(entries);
        }
    }
}
