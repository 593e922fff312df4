//! Linear extension of the zeta evaluation to polynomials, the
//! weakly-decreasing (star) values through the block-sum transform, and the
//! shuffle-insertion sums of the main numeric interface.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::index::{Index, ZPoly};
use crate::numeric::mzv::mzv_numeric;
use crate::numeric::real::{BigReal, MAX_BITS};
use crate::text::render_zword;
use crate::word::{sha_words, Word};

fn out_bits(target_err: f64) -> u32 {
    ((1.0 / target_err).log2().ceil() as u32 + 48).min(MAX_BITS)
}

/// Evaluates `Z` on a polynomial: the coefficient-weighted sum of the zeta
/// values of its words. Every word must be admissible; the error budget is
/// split across terms by coefficient mass.
pub fn eval_z(p: &ZPoly, target_err: f64) -> Result<BigReal> {
    let bits = out_bits(target_err);
    if p.is_zero() {
        return Ok(BigReal::zero(bits));
    }
    let mut coeff_mass = 0.0f64;
    for (w, c) in p.iter() {
        let idx = Index::from_word(w)?;
        if !idx.is_admissible() {
            return Err(Error::NotAdmissible(render_zword(w)));
        }
        coeff_mass += c.numer().to_f64().unwrap_or(f64::INFINITY).abs()
            / c.denom().to_f64().unwrap_or(1.0);
    }
    let per_word = target_err / (2.0 * coeff_mass.max(1.0));
    let mut total = BigReal::zero(bits);
    for (w, c) in p.iter() {
        let value = mzv_numeric(&Index::from_word(w)?, per_word)?;
        total = total.add(&value.mul_rational(c));
    }
    Ok(total)
}

/// `Zbar = Z` after the block-sum transform.
pub fn eval_zbar(p: &ZPoly, target_err: f64) -> Result<BigReal> {
    eval_z(&p.dmap(), target_err)
}

/// Weakly-decreasing nested zeta value of one admissible index, computed by
/// expanding the block-sum transform exactly and evaluating term by term.
pub fn mzsv_numeric(idx: &Index, target_err: f64) -> Result<BigReal> {
    if !idx.is_admissible() {
        return Err(Error::NotAdmissible(idx.to_string()));
    }
    eval_zbar(&idx.poly(), target_err)
}

/// The block-insertion sum: `Zbar( {2}^m sha {3,1}^n )`, the quantity whose
/// value is a rational multiple of `pi^(2m+4n)`.
pub fn bb_star_sum(m: u32, n: u32, target_err: f64) -> Result<BigReal> {
    let twos: Word<u64> = Word::new(vec![2; m as usize]);
    let mut pattern = Vec::with_capacity(2 * n as usize);
    for _ in 0..n {
        pattern.push(3u64);
        pattern.push(1);
    }
    let product = sha_words(&twos, &Word::new(pattern));
    eval_zbar(&product, target_err)
}
