//! Rational reconstruction of pi-power coefficients.
//!
//! Given an evaluated value `v` believed to be `q * pi^w` for a rational
//! `q` of bounded denominator, divide out `pi^w`, walk the continued
//! fraction convergents of the quotient, and accept the first convergent
//! whose residual against `v` survives a re-check in interval arithmetic.
//! Taking the first (smallest-denominator) passing convergent guards
//! against spurious deep convergents manufactured by noise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::numeric::real::{pi, BigReal};
use crate::rational::Rational;

/// Continued-fraction convergents of `x`, in order of increasing
/// denominator, stopping once the denominator exceeds `denom_bound`.
fn convergents(x: &Rational, denom_bound: &BigInt) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let (mut p_prev, mut p) = (BigInt::zero(), BigInt::from(1));
    let (mut q_prev, mut q) = (BigInt::from(1), BigInt::zero());
    while !den.is_zero() {
        let a = num.div_floor(&den);
        let next_p = &a * &p + &p_prev;
        let next_q = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, next_p);
        q_prev = std::mem::replace(&mut q, next_q);
        if q > *denom_bound {
            break;
        }
        out.push(Rational::new(p.clone(), q.clone()));
        let next_den = num - &a * &den;
        num = std::mem::replace(&mut den, next_den);
    }
    out
}

/// Attempts to write `v` as `q * pi^pi_power` with `denom(q) <= denom_bound`.
///
/// A candidate is accepted when `|v - q pi^w|` is provably at most
/// `max(3 * v.err, tol)`; absence is an ordinary outcome, not an error.
pub fn reconstruct_rational(
    v: &BigReal,
    pi_power: u32,
    denom_bound: &BigInt,
    tol: f64,
) -> Option<Rational> {
    let bits = v.bits();
    let pi_pow = pi(bits).powi(pi_power);
    let quotient = if pi_power == 0 {
        v.clone()
    } else {
        v.div(&pi_pow)
    };
    let accept = 3.0 * v.err() + tol.max(0.0);
    for cand in convergents(&quotient.to_rational(), denom_bound) {
        let residual = v.sub(&pi_pow.mul_rational(&cand));
        if residual.to_f64().abs() + residual.err() <= accept {
            return Some(cand);
        }
    }
    None
}
