//! Weight-truncated series over the triple-indexed alphabet.
//!
//! A [`TruncatedSeries`] with bound `W` is the image of a formal series
//! under "discard every word of total weight greater than `W`". All three
//! structure maps are weight-additive and every letter has total weight at
//! least one, so applying the maps to truncated inputs and truncating again
//! reproduces the exact graded component up to `W`. That is what makes a
//! finite check of the series identity conclusive for each bound.
//!
//! The module builds both sides of the series identity from first
//! principles (sums of `d`, `sha` and `star` applied to generator families)
//! and, separately, the closed forms they are supposed to equal: signed
//! sums over words drawn from restricted letter sets.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumerate::weak_compositions;
use crate::error::{Error, Result};
use crate::mletter::{self, MLetter, MPoly, MWord, E1, E2, E3};
use crate::rational::{rat, sign_pow, Rational};
use crate::word::{d_word, sha_words, star_words, Poly, Word};

/// A finite series holding every term of total weight at most `bound`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    bound: u32,
    terms: BTreeMap<MWord, Rational>,
}

impl TruncatedSeries {
    pub fn zero(bound: u32) -> Self {
        TruncatedSeries {
            bound,
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with coefficient one.
    pub fn one(bound: u32) -> Self {
        let mut s = Self::zero(bound);
        s.add_term(Word::empty(), &rat(1));
        s
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &MWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MWord, &Rational)> {
        self.terms.iter()
    }

    /// Adds a term, silently dropping words beyond the weight bound.
    pub fn add_term(&mut self, w: MWord, c: &Rational) {
        if c.is_zero() || mletter::total_weight(&w) > self.bound {
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

    pub fn add_scaled_poly(&mut self, p: &MPoly, scale: &Rational) {
        for (w, c) in p.iter() {
            self.add_term(w.clone(), &(c * scale));
        }
    }

    pub fn add_series(&mut self, other: &Self) {
        assert_eq!(self.bound, other.bound, "mismatched truncation bounds");
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.bound, other.bound, "mismatched truncation bounds");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &(-c));
        }
        out
    }

    pub fn from_poly(bound: u32, p: &MPoly) -> Self {
        let mut s = Self::zero(bound);
        s.add_scaled_poly(p, &rat(1));
        s
    }

    pub fn to_poly(&self) -> MPoly {
        let mut p = MPoly::zero();
        for (w, c) in &self.terms {
            p.add_term(w.clone(), c);
        }
        p
    }

    /// Harmonic product of the truncated components; exact up to the bound.
    pub fn star(&self, other: &Self) -> Self {
        self.bilinear(other, star_words)
    }

    /// Interleaving product of the truncated components; exact up to the bound.
    pub fn sha(&self, other: &Self) -> Self {
        self.bilinear(other, sha_words)
    }

    fn bilinear(&self, other: &Self, f: fn(&MWord, &MWord) -> MPoly) -> Self {
        assert_eq!(self.bound, other.bound, "mismatched truncation bounds");
        let mut out = Self::zero(self.bound);
        for (w1, c1) in &self.terms {
            let wt1 = mletter::total_weight(w1);
            for (w2, c2) in &other.terms {
                if wt1 + mletter::total_weight(w2) > self.bound {
                    continue;
                }
                out.add_scaled_poly(&f(w1, w2), &(c1 * c2));
            }
        }
        out
    }

    /// Block-sum transform; weight-preserving, so no terms are lost.
    pub fn dmap(&self) -> Self {
        let mut out = Self::zero(self.bound);
        for (w, c) in &self.terms {
            out.add_scaled_poly(&d_word(w), c);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Letter families
// ---------------------------------------------------------------------------

/// Letters of the diagonal family at `level`: `(b, b, level)`, the zero
/// triple excluded, total weight at most `max_total`.
pub fn level_letters(level: u32, max_total: u32) -> Vec<MLetter> {
    let mut out = Vec::new();
    let mut b = 0u32;
    while 2 * b + level <= max_total {
        if let Ok(l) = MLetter::new(b, b, level) {
            out.push(l);
        }
        b += 1;
    }
    out
}

/// Support of the closed-form series, up to the weight bound.
pub fn n_letters(max_total: u32) -> Vec<MLetter> {
    all_letters(max_total).into_iter().filter(MLetter::in_n).collect()
}

/// Letters with `|a - b| <= 1`, up to the weight bound.
pub fn great_letters(max_total: u32) -> Vec<MLetter> {
    all_letters(max_total)
        .into_iter()
        .filter(MLetter::is_great)
        .collect()
}

/// Every letter of total weight at most `max_total`.
pub fn all_letters(max_total: u32) -> Vec<MLetter> {
    let mut out = Vec::new();
    for a in 0..=max_total {
        for b in 0..=max_total.saturating_sub(a) {
            for c in 0..=max_total.saturating_sub(a + b) {
                if let Ok(l) = MLetter::new(a, b, c) {
                    out.push(l);
                }
            }
        }
    }
    out
}

/// The three unit triples, filtered by the weight bound.
pub fn basis_letters(max_total: u32) -> Vec<MLetter> {
    if max_total >= 1 {
        vec![E1, E2, E3]
    } else {
        Vec::new()
    }
}

/// Diagonal letters at levels 1 and 2.
pub fn m12_letters(max_total: u32) -> Vec<MLetter> {
    let mut out = level_letters(1, max_total);
    out.extend(level_letters(2, max_total));
    out.sort();
    out
}

/// Diagonal letters at level 0.
pub fn m0_letters(max_total: u32) -> Vec<MLetter> {
    level_letters(0, max_total)
}

/// All words over `letters` of total weight at most `max_total`; with
/// `good_only` the running balance is pruned to {0, 1} and must end at 0.
pub fn words_over(letters: &[MLetter], max_total: u32, good_only: bool) -> Vec<MWord> {
    let mut out = Vec::new();
    let mut current: Vec<MLetter> = Vec::new();
    fn rec(
        letters: &[MLetter],
        remaining: u32,
        balance: i64,
        good_only: bool,
        current: &mut Vec<MLetter>,
        out: &mut Vec<MWord>,
    ) {
        if !good_only || balance == 0 {
            out.push(Word::new(current.clone()));
        }
        for l in letters {
            if l.total() > remaining {
                continue;
            }
            let next_balance = balance + l.balance();
            if good_only && next_balance != 0 && next_balance != 1 {
                continue;
            }
            current.push(*l);
            rec(
                letters,
                remaining - l.total(),
                next_balance,
                good_only,
                current,
                out,
            );
            current.pop();
        }
    }
    rec(letters, max_total, 0, good_only, &mut current, &mut out);
    out
}

// ---------------------------------------------------------------------------
// The series identity: first-principles sides and the closed form
// ---------------------------------------------------------------------------

/// Sum over good words supported on the closed-form letter set, each signed
/// by the parity of the third weight component. Both first-principles sides
/// must agree with this series at every bound.
pub fn target_series(bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for w in words_over(&n_letters(bound), bound, true) {
        let sign = sign_pow(mletter::weight(&w).2);
        out.add_term(w, &sign);
    }
    out
}

/// Sum of `d((1,1,0)^k)` over all `k` within the bound.
pub fn series_d_of_diag_powers(bound: u32) -> TruncatedSeries {
    let diag = MLetter::new(1, 1, 0).unwrap();
    let mut out = TruncatedSeries::zero(bound);
    let mut k = 0u32;
    while 2 * k <= bound {
        let word: MWord = Word::new(vec![diag; k as usize]);
        out.add_scaled_poly(&d_word(&word), &rat(1));
        k += 1;
    }
    out
}

/// Sum of `(-1)^m (e3^m sha (e1 e2)^j)` over all `m, j` within the bound.
pub fn series_signed_basis_shuffles(bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for m in 0..=bound {
        let mut j = 0u32;
        while m + 2 * j <= bound {
            let left: MWord = Word::new(vec![E3; m as usize]);
            let mut pair = Vec::with_capacity(2 * j as usize);
            for _ in 0..j {
                pair.push(E1);
                pair.push(E2);
            }
            let product = sha_words(&left, &Word::new(pair));
            out.add_scaled_poly(&product, &sign_pow(m));
            j += 1;
        }
    }
    out
}

/// Sum of `(-2)^p (x_(u1,u1,1)..x_(up,up,1) sha x_(v1,v1,2)..x_(vq,vq,2))`
/// over all `p, q` and nonnegative `u`, `v` within the bound.
pub fn series_scaled_level_shuffles(bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for p in 0..=bound {
        for q in 0..=(bound.saturating_sub(p)) / 2 {
            let base = p + 2 * q;
            if base > bound {
                continue;
            }
            let minus_two_p = rat(-2).pow(p as i32);
            // remaining weight 2*(sum u + sum v) <= bound - base
            for t in 0..=(bound - base) / 2 {
                for split in weak_compositions(t, (p + q) as usize) {
                    let (us, vs) = split.split_at(p as usize);
                    let u_word: MWord =
                        Word::new(us.iter().map(|&u| MLetter::new(u, u, 1).unwrap()).collect());
                    let v_word: MWord =
                        Word::new(vs.iter().map(|&v| MLetter::new(v, v, 2).unwrap()).collect());
                    out.add_scaled_poly(&sha_words(&u_word, &v_word), &minus_two_p);
                }
            }
        }
    }
    out
}

/// Sum of `d(e3^i sha (e1 e2)^j)` over all `i, j` within the bound.
pub fn series_d_of_basis_shuffles(bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for i in 0..=bound {
        let mut j = 0u32;
        while i + 2 * j <= bound {
            let left: MWord = Word::new(vec![E3; i as usize]);
            let mut pair = Vec::with_capacity(2 * j as usize);
            for _ in 0..j {
                pair.push(E1);
                pair.push(E2);
            }
            let product = Poly::from_word(left)
                .sha(&Poly::from_word(Word::new(pair)))
                .dmap();
            out.add_scaled_poly(&product, &rat(1));
            j += 1;
        }
    }
    out
}

/// Left side of the series identity, from first principles.
pub fn lhs_series(bound: u32) -> TruncatedSeries {
    series_d_of_basis_shuffles(bound).star(&series_scaled_level_shuffles(bound))
}

/// Right side of the series identity, from first principles.
pub fn rhs_series(bound: u32) -> TruncatedSeries {
    series_signed_basis_shuffles(bound).star(&series_d_of_diag_powers(bound))
}

// ---------------------------------------------------------------------------
// Closed forms of the four generator families
// ---------------------------------------------------------------------------

/// All words over the level-0 diagonal letters, coefficient one. Closed form
/// of [`series_d_of_diag_powers`].
pub fn series_words_over_level0(bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for w in words_over(&m0_letters(bound), bound, false) {
        out.add_term(w, &rat(1));
    }
    out
}

/// Good words over the three unit triples, signed by the parity of the
/// third weight component. Closed form of [`series_signed_basis_shuffles`].
pub fn series_signed_good_basis_words(bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for w in words_over(&basis_letters(bound), bound, true) {
        let sign = sign_pow(mletter::weight(&w).2);
        out.add_term(w, &sign);
    }
    out
}

/// Words over levels 1 and 2, weighted by `(-2)^(number of level-1 letters)`.
/// Closed form of [`series_scaled_level_shuffles`].
pub fn series_char_weighted_level_words(bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for w in words_over(&m12_letters(bound), bound, false) {
        let chars = mletter::char_count(&w).expect("letters drawn from levels 1 and 2");
        out.add_term(w, &rat(-2).pow(chars as i32));
    }
    out
}

/// Good words weighted by the product of letter multiplicities. Closed form
/// of [`series_d_of_basis_shuffles`].
pub fn series_multiplicity_good_words(bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for w in words_over(&great_letters(bound), bound, true) {
        let mult: BigInt = w
            .letters()
            .iter()
            .map(MLetter::multiplicity)
            .product();
        out.add_term(w, &Rational::from_integer(mult));
    }
    out
}

// ---------------------------------------------------------------------------
// Letterwise convolution of two weighted families (two routes)
// ---------------------------------------------------------------------------

/// A letter set with a per-letter coefficient. `letters(t)` must return every
/// member of total weight at most `t`.
#[derive(Clone, Copy)]
pub struct CoeffFamily {
    pub letters: fn(u32) -> Vec<MLetter>,
    pub coeff: fn(&MLetter) -> Rational,
    /// Restrict the word sum to good words.
    pub good_only: bool,
}

fn family_word_coeff(fam: &CoeffFamily, w: &MWord) -> Rational {
    w.letters().iter().map(fam.coeff).product()
}

/// The expanded route: the double sum of `A_w B_w' (w star w')` over words
/// from the two families. The second family must consist of diagonal letters
/// (`a = b`), which keeps goodness stable under merging.
pub fn star_sum_expanded(bound: u32, fam_a: &CoeffFamily, fam_b: &CoeffFamily) -> TruncatedSeries {
    let letters_b = (fam_b.letters)(bound);
    assert!(
        letters_b.iter().all(|l| l.balance() == 0),
        "second family must be diagonal"
    );
    let mut out = TruncatedSeries::zero(bound);
    for wa in words_over(&(fam_a.letters)(bound), bound, fam_a.good_only) {
        let ca = family_word_coeff(fam_a, &wa);
        let budget = bound - mletter::total_weight(&wa);
        for wb in words_over(&letters_b, budget, fam_b.good_only) {
            let coeff = &ca * family_word_coeff(fam_b, &wb);
            out.add_scaled_poly(&star_words(&wa, &wb), &coeff);
        }
    }
    out
}

/// The letterwise route: the sum over good words of the per-letter
/// convolution coefficients `sum A_beta B_gamma` over splittings
/// `beta + gamma = letter` (with the empty contribution counting as one).
pub fn star_sum_letterwise(
    bound: u32,
    fam_a: &CoeffFamily,
    fam_b: &CoeffFamily,
) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    for w in words_over(&great_letters(bound), bound, true) {
        let mut coeff = rat(1);
        for l in w.letters() {
            coeff *= letter_convolution(l, fam_a, fam_b);
            if coeff.is_zero() {
                break;
            }
        }
        out.add_term(w, &coeff);
    }
    out
}

fn letter_convolution(alpha: &MLetter, fam_a: &CoeffFamily, fam_b: &CoeffFamily) -> Rational {
    let total = alpha.total();
    let letters_a = (fam_a.letters)(total);
    let letters_b = (fam_b.letters)(total);
    let (aa, ab, ac) = alpha.parts();
    let mut sum = rat(0);
    // gamma = 0, beta = alpha
    if letters_a.contains(alpha) {
        sum += (fam_a.coeff)(alpha);
    }
    for gamma in &letters_b {
        let (ga, gb, gc) = gamma.parts();
        if ga > aa || gb > ab || gc > ac {
            continue;
        }
        let b_coeff = (fam_b.coeff)(gamma);
        if gamma == alpha {
            // beta = 0 contributes with unit A-coefficient
            sum += b_coeff.clone();
            continue;
        }
        let beta = MLetter::new(aa - ga, ab - gb, ac - gc).expect("nonzero by the case above");
        if letters_a.contains(&beta) {
            sum += (fam_a.coeff)(&beta) * b_coeff;
        }
    }
    sum
}

/// The family pair whose letterwise convolution supports the right side of
/// the series identity: signed unit triples against the level-0 diagonal.
pub fn signed_basis_vs_level0() -> (CoeffFamily, CoeffFamily) {
    (
        CoeffFamily {
            letters: basis_letters,
            coeff: |l| sign_pow(l.e3()),
            good_only: true,
        },
        CoeffFamily {
            letters: m0_letters,
            coeff: |_| rat(1),
            good_only: false,
        },
    )
}

// ---------------------------------------------------------------------------
// The per-letter coefficient of the fully convolved left side
// ---------------------------------------------------------------------------

/// Binomial `C(a+b+c, c)` with the zero triple allowed (weight one).
fn multiplicity_parts(a: u32, b: u32, c: u32) -> BigInt {
    num_integer::binomial(BigInt::from(a + b + c), BigInt::from(c))
}

/// Closed form of the per-letter coefficient on great letters:
/// 1 when `c = 0`, -1 when `a = b` and `c = 1`, 0 otherwise.
pub fn conv_coeff(alpha: &MLetter) -> Result<Rational> {
    if !alpha.is_great() {
        return Err(Error::Domain(format!(
            "conv_coeff closed form needs a great letter, got {alpha}"
        )));
    }
    let (a, b, c) = alpha.parts();
    Ok(if c == 0 {
        rat(1)
    } else if c == 1 && a == b {
        rat(-1)
    } else {
        rat(0)
    })
}

/// The defining sum: over `beta + gamma = alpha` with `beta` any letter or
/// zero and `gamma` zero or diagonal of level 1 or 2, the product of the
/// multiplicity of `beta` and `(-2)` when `gamma` has level 1. Total on the
/// whole alphabet.
pub fn conv_coeff_enumerated(alpha: &MLetter) -> Rational {
    let (a, b, c) = alpha.parts();
    // gamma = 0
    let mut sum = Rational::from_integer(multiplicity_parts(a, b, c));
    for level in [1u32, 2] {
        if c < level {
            continue;
        }
        let b_coeff = if level == 1 { rat(-2) } else { rat(1) };
        for k in 0..=a.min(b) {
            // beta = alpha - (k, k, level) with all components nonnegative
            let mult = multiplicity_parts(a - k, b - k, c - level);
            sum += Rational::from_integer(mult) * &b_coeff;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ml(a: u32, b: u32, c: u32) -> MLetter {
        MLetter::new(a, b, c).unwrap()
    }

    #[test]
    fn target_series_small_bounds() {
        let t0 = target_series(0);
        assert_eq!(t0.num_terms(), 1);
        assert_eq!(t0.coeff(&Word::empty()), rat(1));

        let t1 = target_series(1);
        assert_eq!(t1.num_terms(), 2);
        assert_eq!(t1.coeff(&Word::new(vec![E3])), rat(-1));

        let t2 = target_series(2);
        assert_eq!(t2.coeff(&Word::new(vec![ml(1, 1, 0)])), rat(1));
        assert_eq!(t2.coeff(&Word::new(vec![E1, E2])), rat(1));
        assert_eq!(t2.coeff(&Word::new(vec![E3, E3])), rat(1));
        assert_eq!(t2.coeff(&Word::new(vec![E2, E1])), rat(0));
        // (0,0,2) is not in the support
        assert_eq!(t2.coeff(&Word::new(vec![ml(0, 0, 2)])), rat(0));
        assert_eq!(t2.num_terms(), 5);
    }

    #[test]
    fn sides_agree_at_small_bounds() {
        for w in 0..=4 {
            let lhs = lhs_series(w);
            let rhs = rhs_series(w);
            let target = target_series(w);
            assert_eq!(lhs, target, "left side differs at bound {w}");
            assert_eq!(rhs, target, "right side differs at bound {w}");
        }
    }

    #[test]
    fn generator_closed_forms_small_bounds() {
        for w in 0..=4 {
            assert_eq!(series_d_of_diag_powers(w), series_words_over_level0(w));
            assert_eq!(
                series_signed_basis_shuffles(w),
                series_signed_good_basis_words(w)
            );
            assert_eq!(
                series_scaled_level_shuffles(w),
                series_char_weighted_level_words(w)
            );
            assert_eq!(
                series_d_of_basis_shuffles(w),
                series_multiplicity_good_words(w)
            );
        }
    }

    #[test]
    fn letterwise_convolution_matches_expansion() {
        let (fam_a, fam_b) = signed_basis_vs_level0();
        for w in 0..=4 {
            let expanded = star_sum_expanded(w, &fam_a, &fam_b);
            let letterwise = star_sum_letterwise(w, &fam_a, &fam_b);
            assert_eq!(expanded, letterwise, "bound {w}");
            // and this instance is exactly the closed-form target
            assert_eq!(letterwise, target_series(w));
        }
    }

    #[test]
    fn conv_coeff_cases() {
        assert_eq!(conv_coeff(&ml(2, 2, 0)).unwrap(), rat(1));
        assert_eq!(conv_coeff(&ml(3, 3, 1)).unwrap(), rat(-1));
        assert_eq!(conv_coeff(&ml(2, 2, 5)).unwrap(), rat(0));
        assert_eq!(conv_coeff(&ml(2, 1, 1)).unwrap(), rat(0));
        assert!(conv_coeff(&ml(3, 1, 0)).is_err());
    }

    #[test]
    fn conv_coeff_matches_enumeration() {
        for alpha in great_letters(6) {
            assert_eq!(
                conv_coeff(&alpha).unwrap(),
                conv_coeff_enumerated(&alpha),
                "letter {alpha}"
            );
        }
    }

    #[test]
    fn truncation_drops_overweight_terms() {
        let mut s = TruncatedSeries::zero(1);
        s.add_term(Word::new(vec![ml(1, 1, 0)]), &rat(1));
        assert!(s.is_zero());
        s.add_term(Word::new(vec![E3]), &rat(1));
        assert_eq!(s.num_terms(), 1);
    }

    #[test]
    fn words_over_respects_goodness() {
        let words = words_over(&basis_letters(2), 2, true);
        // empty, e3, e1 e2, e3 e3
        assert_eq!(words.len(), 4);
        for w in &words {
            assert!(mletter::is_good(w));
        }
    }
}
