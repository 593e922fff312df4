//! Enumerative counterparts of the structure maps, used as independent
//! oracles for the recursive implementations.
//!
//! `dmap` sums over nondecreasing surjections, `star` over pairs of strictly
//! increasing maps with covering images, and `sha` over the sub-family with
//! disjoint images. Each family is enumerated literally and the defining
//! sums are evaluated term by term; nothing here shares code with the
//! recursions in [`crate::word`].

use crate::word::{Letter, Poly, Word};

/// A nondecreasing surjection `[n] -> [l]`, stored as its value sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurjectionND {
    pub n: usize,
    pub l: usize,
    pub values: Vec<usize>,
}

/// A triple `(l, sigma, tau)` of strictly increasing maps `[m] -> [l]`,
/// `[n] -> [l]` whose images cover `[l]`. For the interleaving family the
/// images are also disjoint, forcing `l = m + n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MergePair {
    pub l: usize,
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
}

/// A partition of `{1, .., n}` into disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetPartition {
    pub blocks: Vec<Vec<usize>>,
}

/// All nondecreasing surjections out of `[n]`, in lexicographic order of
/// `(l, values)`. For `n = 0` the unique empty map to `[0]`.
pub fn enumerate_sd(n: usize) -> Vec<SurjectionND> {
    let mut out = Vec::new();
    for l in 0..=n {
        let mut values = Vec::new();
        extend_nondecreasing(n, l, &mut values, &mut out);
    }
    out
}

fn extend_nondecreasing(n: usize, l: usize, values: &mut Vec<usize>, out: &mut Vec<SurjectionND>) {
    if values.len() == n {
        // surjectivity: every element of [l] is hit
        let mut hit = vec![false; l];
        for &v in values.iter() {
            hit[v - 1] = true;
        }
        if hit.iter().all(|&h| h) {
            out.push(SurjectionND {
                n,
                l,
                values: values.clone(),
            });
        }
        return;
    }
    let lo = values.last().copied().unwrap_or(1);
    for v in lo..=l {
        values.push(v);
        extend_nondecreasing(n, l, values, out);
        values.pop();
    }
}

fn increasing_maps(m: usize, l: usize) -> Vec<Vec<usize>> {
    // strictly increasing [m] -> [l], i.e. m-subsets of [l] in order
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(m: usize, l: usize, next: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for v in next..=l {
            current.push(v);
            rec(m, l, v + 1, current, out);
            current.pop();
        }
    }
    rec(m, l, 1, &mut current, &mut out);
    out
}

/// The covering family: all `(l, sigma, tau)` with strictly increasing maps
/// whose images together cover `[l]`. `max(m, n) <= l <= m + n`.
pub fn enumerate_sstar(m: usize, n: usize) -> Vec<MergePair> {
    let mut out = Vec::new();
    for l in m.max(n)..=m + n {
        for sigma in increasing_maps(m, l) {
            for tau in increasing_maps(n, l) {
                let mut hit = vec![false; l];
                for &v in sigma.iter().chain(tau.iter()) {
                    hit[v - 1] = true;
                }
                if hit.iter().all(|&h| h) {
                    out.push(MergePair {
                        l,
                        sigma: sigma.clone(),
                        tau,
                    });
                }
            }
        }
    }
    out
}

/// The disjoint sub-family of [`enumerate_sstar`]: images partition `[l]`,
/// so `l = m + n` and there are `C(m+n, m)` elements.
pub fn enumerate_ssha(m: usize, n: usize) -> Vec<MergePair> {
    enumerate_sstar(m, n)
        .into_iter()
        .filter(|p| p.sigma.iter().all(|v| !p.tau.contains(v)))
        .collect()
}

fn merged_word<L: Letter>(pair: &MergePair, a: &[L], b: &[L]) -> Word<L> {
    let mut slots: Vec<Option<L>> = vec![None; pair.l];
    for (s, &i) in pair.sigma.iter().enumerate() {
        let slot = &mut slots[i - 1];
        *slot = Some(match slot.take() {
            None => a[s].clone(),
            Some(prev) => prev.merge(&a[s]),
        });
    }
    for (t, &i) in pair.tau.iter().enumerate() {
        let slot = &mut slots[i - 1];
        *slot = Some(match slot.take() {
            None => b[t].clone(),
            Some(prev) => prev.merge(&b[t]),
        });
    }
    Word::new(slots.into_iter().map(|s| s.unwrap()).collect())
}

/// Harmonic product evaluated from the defining sum over the covering family.
pub fn star_enum<L: Letter>(u: &Word<L>, v: &Word<L>) -> Poly<L> {
    let mut out = Poly::zero();
    for pair in enumerate_sstar(u.depth(), v.depth()) {
        out.add_term(
            merged_word(&pair, u.letters(), v.letters()),
            &crate::rational::rat(1),
        );
    }
    out
}

/// Interleaving product evaluated from the defining sum over the disjoint family.
pub fn sha_enum<L: Letter>(u: &Word<L>, v: &Word<L>) -> Poly<L> {
    let mut out = Poly::zero();
    for pair in enumerate_ssha(u.depth(), v.depth()) {
        out.add_term(
            merged_word(&pair, u.letters(), v.letters()),
            &crate::rational::rat(1),
        );
    }
    out
}

/// Block-sum transform evaluated from the defining sum over nondecreasing
/// surjections.
pub fn d_enum<L: Letter>(w: &Word<L>) -> Poly<L> {
    let mut out = Poly::zero();
    for surj in enumerate_sd(w.depth()) {
        let mut blocks: Vec<Option<L>> = vec![None; surj.l];
        for (s, &i) in surj.values.iter().enumerate() {
            let slot = &mut blocks[i - 1];
            *slot = Some(match slot.take() {
                None => w.letters()[s].clone(),
                Some(prev) => prev.merge(&w.letters()[s]),
            });
        }
        out.add_term(
            Word::new(blocks.into_iter().map(|b| b.unwrap()).collect()),
            &crate::rational::rat(1),
        );
    }
    out
}

/// All partitions of `{1, .., n}`; blocks and block lists are sorted.
/// The count is the n-th Bell number. Requires `n >= 1`.
pub fn enumerate_partitions(n: usize) -> Vec<SetPartition> {
    assert!(n >= 1, "partitions are defined for n >= 1");
    let mut out = vec![SetPartition {
        blocks: vec![vec![1]],
    }];
    for element in 2..=n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.blocks.len() {
                let mut q = p.clone();
                q.blocks[i].push(element);
                next.push(q);
            }
            let mut q = p.clone();
            q.blocks.push(vec![element]);
            next.push(q);
        }
        out = next;
    }
    for p in &mut out {
        p.blocks.sort();
    }
    out.sort_by(|a, b| a.blocks.cmp(&b.blocks));
    out
}

/// All length-`parts` sequences of nonnegative integers summing to `total`,
/// in lexicographic order. A single empty sequence when `parts = 0` and
/// `total = 0`; empty when `parts = 0` and `total > 0`.
pub fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rem: u32, parts_left: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts_left == 0 {
            if rem == 0 {
                out.push(current.clone());
            }
            return;
        }
        if parts_left == 1 {
            current.push(rem);
            out.push(current.clone());
            current.pop();
            return;
        }
        for v in 0..=rem {
            current.push(v);
            rec(rem - v, parts_left - 1, current, out);
            current.pop();
        }
    }
    rec(total, parts, &mut current, &mut out);
    out
}
