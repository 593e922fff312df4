//! Both sides of the two-parameter product identities.
//!
//! The harmonic identity lives in the z-word algebra and is parametrized by
//! letters `a, b, c >= 1` and exponents `m, n >= 0`. Its lift replaces the
//! three generating letters by the unit triples, so that applying the
//! homomorphism `(p,q,r) -> z_(ap+bq+cr)` letterwise recovers the harmonic
//! identity for every `(a, b, c)`.
//!
//! Summation layout, shared by both sides of the left identity: the outer
//! sum runs over `(i, p, q)` with `i + p + 2q = m`, the inner one over
//! `(j, u_1..u_p, v_1..v_q)` with `j + sum(u) + sum(v) = n`, all variables
//! ranging over the nonnegative integers.

use crate::enumerate::weak_compositions;
use crate::index::{ZPoly, ZWord};
use crate::mletter::{MLetter, MPoly, MWord, E1, E2, E3};
use crate::rational::{rat, sign_pow};
use crate::word::{Poly, Word};

fn zword_of(entries: Vec<u64>) -> ZWord {
    Word::new(entries)
}

fn repeat_word<L: crate::word::Letter>(pattern: &[L], times: u32) -> Word<L> {
    let mut v = Vec::with_capacity(pattern.len() * times as usize);
    for _ in 0..times {
        v.extend_from_slice(pattern);
    }
    Word::new(v)
}

/// Splits of `m` as `i + p + 2q` with all parts nonnegative.
fn outer_splits(m: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for q in 0..=m / 2 {
        for p in 0..=m - 2 * q {
            out.push((m - 2 * q - p, p, q));
        }
    }
    out
}

/// Left side of the harmonic identity.
pub fn harmonic_identity_lhs(a: u64, b: u64, c: u64, m: u32, n: u32) -> ZPoly {
    assert!(a >= 1 && b >= 1 && c >= 1);
    let mut total = ZPoly::zero();
    for (i, p, q) in outer_splits(m) {
        for j in 0..=n {
            // d( z_c^i sha (z_a z_b)^j ), reused across the (u, v) splits
            let left = repeat_word(&[c], i);
            let right = repeat_word(&[a, b], j);
            let d_part = Poly::from_word(left).sha(&Poly::from_word(right)).dmap();
            let minus_two_p = rat(-2).pow(p as i32);
            for split in weak_compositions(n - j, (p + q) as usize) {
                let (us, vs) = split.split_at(p as usize);
                let u_word = zword_of(us.iter().map(|&u| (a + b) * u64::from(u) + c).collect());
                let v_word = zword_of(
                    vs.iter()
                        .map(|&v| (a + b) * u64::from(v) + 2 * c)
                        .collect(),
                );
                let uv = Poly::from_word(u_word).sha(&Poly::from_word(v_word));
                total.add_scaled(&d_part.star(&uv), &minus_two_p);
            }
        }
    }
    total
}

/// Right side of the harmonic identity.
pub fn harmonic_identity_rhs(a: u64, b: u64, c: u64, m: u32, n: u32) -> ZPoly {
    assert!(a >= 1 && b >= 1 && c >= 1);
    let mut total = ZPoly::zero();
    for j in 0..=n {
        let k = n - j;
        let left = Poly::from_word(repeat_word(&[c], m)).sha(&Poly::from_word(repeat_word(
            &[a, b],
            j,
        )));
        let d_part = Poly::from_word(repeat_word(&[a + b], k)).dmap();
        total.add_scaled(&left.star(&d_part), &rat(1));
    }
    total.scale(&sign_pow(m))
}

fn diag(u: u32, level: u32) -> MLetter {
    MLetter::new(u, u, level).expect("diagonal letters are nonzero")
}

/// Left side of the lifted identity in the triple-indexed algebra.
pub fn lifted_identity_lhs(m: u32, n: u32) -> MPoly {
    let mut total = MPoly::zero();
    for (i, p, q) in outer_splits(m) {
        for j in 0..=n {
            let left = repeat_word(&[E3], i);
            let right = repeat_word(&[E1, E2], j);
            let d_part = Poly::from_word(left).sha(&Poly::from_word(right)).dmap();
            let minus_two_p = rat(-2).pow(p as i32);
            for split in weak_compositions(n - j, (p + q) as usize) {
                let (us, vs) = split.split_at(p as usize);
                let u_word: MWord = Word::new(us.iter().map(|&u| diag(u, 1)).collect());
                let v_word: MWord = Word::new(vs.iter().map(|&v| diag(v, 2)).collect());
                let uv = Poly::from_word(u_word).sha(&Poly::from_word(v_word));
                total.add_scaled(&d_part.star(&uv), &minus_two_p);
            }
        }
    }
    total
}

/// Right side of the lifted identity.
pub fn lifted_identity_rhs(m: u32, n: u32) -> MPoly {
    let mut total = MPoly::zero();
    for j in 0..=n {
        let k = n - j;
        let left = Poly::from_word(repeat_word(&[E3], m)).sha(&Poly::from_word(repeat_word(
            &[E1, E2],
            j,
        )));
        let d_part = Poly::from_word(repeat_word(&[diag(1, 0)], k)).dmap();
        total.add_scaled(&left.star(&d_part), &rat(1));
    }
    total.scale(&sign_pow(m))
}
