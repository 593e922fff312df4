//! Exact verification of the product identities over parameter grids,
//! reporting structured diffs on failure.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::enumerate::{d_enum, sha_enum, star_enum};
use crate::identities::{
    harmonic_identity_lhs, harmonic_identity_rhs, lifted_identity_lhs, lifted_identity_rhs,
};
use crate::index::{random_index, Index};
use crate::mletter::{self, hom_poly};
use crate::series::{lhs_series, rhs_series, target_series};
use crate::text::{render_mpoly, render_zpoly};
use crate::xy::d_via_phi;

/// Outcome of one verification. `pass` holds exactly when the reported diff
/// is the zero polynomial and no additional violation was noted.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub identity: String,
    pub params: Vec<(String, i64)>,
    pub pass: bool,
    /// Canonical serialization of LHS minus RHS; `"0"` when the sides agree.
    pub diff: String,
    /// Diagnostics beyond the diff (e.g. a grading violation).
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl VerifyReport {
    fn new(identity: &str, params: Vec<(String, i64)>, diff: String, started: Instant) -> Self {
        let pass = diff == "0";
        VerifyReport {
            identity: identity.into(),
            params,
            pass,
            diff,
            note: None,
            elapsed: started.elapsed(),
        }
    }

    fn with_note(mut self, note: Option<String>) -> Self {
        if note.is_some() {
            self.pass = false;
        }
        self.note = note;
        self
    }
}

fn params(pairs: &[(&str, i64)]) -> Vec<(String, i64)> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Compares both sides of the harmonic identity at one parameter point.
pub fn verify_harmonic_identity(a: u64, b: u64, c: u64, m: u32, n: u32) -> VerifyReport {
    let started = Instant::now();
    let diff = harmonic_identity_lhs(a, b, c, m, n).sub(&harmonic_identity_rhs(a, b, c, m, n));
    VerifyReport::new(
        "mthm",
        params(&[
            ("a", a as i64),
            ("b", b as i64),
            ("c", c as i64),
            ("m", m as i64),
            ("n", n as i64),
        ]),
        render_zpoly(&diff),
        started,
    )
}

/// Compares both sides of the lifted identity and checks that every term on
/// both sides has weight `(n, n, m)`.
pub fn verify_lifted_identity(m: u32, n: u32) -> VerifyReport {
    let started = Instant::now();
    let lhs = lifted_identity_lhs(m, n);
    let rhs = lifted_identity_rhs(m, n);
    let mut note = None;
    for (side, poly) in [("lhs", &lhs), ("rhs", &rhs)] {
        for (w, _) in poly.iter() {
            if mletter::weight(w) != (n, n, m) {
                note = Some(format!(
                    "{side} term {} has weight {:?}, expected ({n},{n},{m})",
                    crate::text::render_mword(w),
                    mletter::weight(w)
                ));
            }
        }
    }
    let diff = lhs.sub(&rhs);
    VerifyReport::new(
        "inA",
        params(&[("m", m as i64), ("n", n as i64)]),
        render_mpoly(&diff),
        started,
    )
    .with_note(note)
}

/// Checks that both first-principles series match the closed form at the
/// given weight bound.
pub fn verify_series_identity(bound: u32) -> VerifyReport {
    let started = Instant::now();
    let target = target_series(bound);
    let lhs_diff = lhs_series(bound).sub(&target);
    let rhs_diff = rhs_series(bound).sub(&target);
    let diff = if !lhs_diff.is_zero() {
        render_mpoly(&lhs_diff.to_poly())
    } else {
        render_mpoly(&rhs_diff.to_poly())
    };
    VerifyReport::new("informal", params(&[("W", bound as i64)]), diff, started)
}

/// Checks that the letterwise homomorphism carries the lifted identity sides
/// onto the harmonic identity sides at one parameter point.
pub fn verify_hom_consistency(a: u64, b: u64, c: u64, m: u32, n: u32) -> VerifyReport {
    let started = Instant::now();
    let lhs_diff = hom_poly(&lifted_identity_lhs(m, n), a, b, c)
        .sub(&harmonic_identity_lhs(a, b, c, m, n));
    let rhs_diff = hom_poly(&lifted_identity_rhs(m, n), a, b, c)
        .sub(&harmonic_identity_rhs(a, b, c, m, n));
    let diff = if !lhs_diff.is_zero() {
        render_zpoly(&lhs_diff)
    } else {
        render_zpoly(&rhs_diff)
    };
    VerifyReport::new(
        "oracles.hom",
        params(&[
            ("a", a as i64),
            ("b", b as i64),
            ("c", c as i64),
            ("m", m as i64),
            ("n", n as i64),
        ]),
        diff,
        started,
    )
}

/// All indices with depth at most `max_depth` and entries in `1..=max_entry`.
pub fn index_pool(max_depth: usize, max_entry: u64) -> Vec<Index> {
    let mut out = vec![Index::empty()];
    let mut frontier = vec![Vec::<u64>::new()];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for prefix in &frontier {
            for e in 1..=max_entry {
                let mut entries = prefix.clone();
                entries.push(e);
                out.push(Index::new(entries.clone()).unwrap());
                next.push(entries);
            }
        }
        frontier = next;
    }
    out
}

/// Sweeps the recursive structure maps against their enumerative oracles:
/// every index pair from the exhaustive pool plus `random_pairs` seeded
/// random pairs of depth up to `max_depth + 1`. Returns one report per map,
/// with the first failing case serialized in the diff.
pub fn verify_product_oracles(
    max_depth: usize,
    max_entry: u64,
    random_pairs: usize,
    seed: u64,
) -> Vec<VerifyReport> {
    let pool = index_pool(max_depth, max_entry);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pairs: Vec<(Index, Index)> = Vec::new();
    for u in &pool {
        for v in &pool {
            pairs.push((u.clone(), v.clone()));
        }
    }
    for _ in 0..random_pairs {
        pairs.push((
            random_index(&mut rng, max_depth + 1, max_entry),
            random_index(&mut rng, max_depth + 1, max_entry),
        ));
    }

    let grid = params(&[
        ("max_depth", max_depth as i64),
        ("max_entry", max_entry as i64),
        ("random_pairs", random_pairs as i64),
        ("seed", seed as i64),
    ]);

    let mut out = Vec::new();

    let started = Instant::now();
    let mut diff = "0".to_string();
    for (u, v) in &pairs {
        let d = u.poly().star(&v.poly()).sub(&star_enum(&u.word(), &v.word()));
        if !d.is_zero() {
            diff = format!("{} star {}: {}", u, v, render_zpoly(&d));
            break;
        }
    }
    out.push(VerifyReport::new("oracles.star", grid.clone(), diff, started));

    let started = Instant::now();
    let mut diff = "0".to_string();
    for (u, v) in &pairs {
        let d = u.poly().sha(&v.poly()).sub(&sha_enum(&u.word(), &v.word()));
        if !d.is_zero() {
            diff = format!("{} sha {}: {}", u, v, render_zpoly(&d));
            break;
        }
    }
    out.push(VerifyReport::new("oracles.sha", grid.clone(), diff, started));

    let started = Instant::now();
    let mut diff = "0".to_string();
    for (u, _) in &pairs {
        let d = u.poly().dmap().sub(&d_enum(&u.word()));
        if !d.is_zero() {
            diff = format!("d {}: {}", u, render_zpoly(&d));
            break;
        }
    }
    out.push(VerifyReport::new("oracles.d", grid.clone(), diff, started));

    let started = Instant::now();
    let mut diff = "0".to_string();
    for (u, _) in &pairs {
        let d = d_via_phi(u).sub(&u.poly().dmap());
        if !d.is_zero() {
            diff = format!("d_via_phi {}: {}", u, render_zpoly(&d));
            break;
        }
    }
    out.push(VerifyReport::new("oracles.d_phi", grid, diff, started));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_identity_points_pass() {
        for (a, b, c, m, n) in [(3, 1, 2, 0, 1), (1, 1, 1, 0, 0), (2, 3, 1, 2, 1)] {
            let report = verify_harmonic_identity(a, b, c, m, n);
            assert!(report.pass, "diff: {}", report.diff);
            assert_eq!(report.diff, "0");
        }
    }

    #[test]
    fn lifted_identity_points_pass() {
        for (m, n) in [(0, 1), (0, 0), (2, 2)] {
            let report = verify_lifted_identity(m, n);
            assert!(report.pass, "diff: {}", report.diff);
            assert!(report.note.is_none());
        }
    }

    #[test]
    fn series_identity_small_bounds_pass() {
        for w in [0, 3] {
            let report = verify_series_identity(w);
            assert!(report.pass, "diff at W={w}: {}", report.diff);
        }
    }

    #[test]
    fn hom_consistency_points_pass() {
        for ((a, b, c), (m, n)) in [
            ((3, 1, 2), (0, 1)),
            ((1, 1, 1), (0, 0)),
            ((2, 2, 3), (1, 1)),
        ] {
            let report = verify_hom_consistency(a, b, c, m, n);
            assert!(report.pass, "diff: {}", report.diff);
        }
    }

    #[test]
    fn oracle_sweep_passes() {
        for report in verify_product_oracles(2, 3, 10, 7) {
            assert!(report.pass, "{}: {}", report.identity, report.diff);
        }
    }

    #[test]
    fn index_pool_size() {
        // 1 + 3 + 9 + 27 indices at depth <= 3, entries <= 3
        assert_eq!(index_pool(3, 3).len(), 40);
    }
}
