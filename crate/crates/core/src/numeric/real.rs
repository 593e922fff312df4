//! Fixed-point arbitrary-precision reals with explicit error bounds.
//!
//! A [`BigReal`] stores `mant * 2^-bits` together with an absolute error
//! bound `err` that every operation propagates conservatively (upward
//! rounded, plus one ulp for the truncation the operation itself performs).
//! This is not a general float type: it covers exactly what the evaluator
//! needs — ring operations, division, rational scaling, integer powers and
//! pi — at magnitudes around 1 and precisions up to roughly 250 decimal
//! digits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::Rational;

/// Working precisions are capped so error bookkeeping in f64 cannot
/// underflow to zero.
pub const MAX_BITS: u32 = 1000;

/// Bumps an error bound upward to absorb f64 rounding in the bookkeeping.
pub fn err_up(x: f64) -> f64 {
    x * (1.0 + 1e-12) + 1e-300
}

fn ulp(bits: u32) -> f64 {
    2f64.powi(-(bits as i32))
}

#[derive(Clone, Debug)]
pub struct BigReal {
    mant: BigInt,
    bits: u32,
    err: f64,
}

impl BigReal {
    pub fn zero(bits: u32) -> Self {
        BigReal {
            mant: BigInt::zero(),
            bits,
            err: 0.0,
        }
    }

    pub fn one(bits: u32) -> Self {
        BigReal {
            mant: BigInt::from(1) << bits,
            bits,
            err: 0.0,
        }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        BigReal {
            mant: BigInt::from(n) << bits,
            bits,
            err: 0.0,
        }
    }

    /// Nearest fixed-point value below `r`; the truncation enters `err`.
    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let mant = (r.numer() << bits).div_floor(r.denom());
        BigReal {
            mant,
            bits,
            err: ulp(bits),
        }
    }

    pub(crate) fn from_mant(mant: BigInt, bits: u32, err: f64) -> Self {
        BigReal { mant, bits, err }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn err(&self) -> f64 {
        self.err
    }

    pub fn with_err(mut self, err: f64) -> Self {
        self.err = err;
        self
    }

    /// Approximate magnitude of the stored value (not the true value).
    pub fn to_f64(&self) -> f64 {
        let approx = self.mant.to_f64().unwrap_or(f64::INFINITY);
        approx * ulp(self.bits)
    }

    /// Upper bound for the absolute value of the represented number.
    pub fn abs_upper(&self) -> f64 {
        err_up(self.to_f64().abs() + self.err)
    }

    fn rescaled(&self, bits: u32) -> BigReal {
        if bits == self.bits {
            self.clone()
        } else if bits > self.bits {
            BigReal {
                mant: &self.mant << (bits - self.bits),
                bits,
                err: self.err,
            }
        } else {
            BigReal {
                mant: floor_shr(&self.mant, self.bits - bits),
                bits,
                err: err_up(self.err + ulp(bits)),
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let bits = self.bits.max(other.bits);
        let a = self.rescaled(bits);
        let b = other.rescaled(bits);
        BigReal {
            mant: a.mant + b.mant,
            bits,
            err: err_up(a.err + b.err),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BigReal {
            mant: -self.mant.clone(),
            bits: self.bits,
            err: self.err,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bits = self.bits.max(other.bits);
        let a = self.rescaled(bits);
        let b = other.rescaled(bits);
        let mant = floor_shr(&(&a.mant * &b.mant), bits);
        let err = err_up(
            a.err * (b.to_f64().abs() + b.err) + b.err * a.to_f64().abs() + ulp(bits),
        );
        BigReal { mant, bits, err }
    }

    /// Exact scaling by a rational, up to one final truncation.
    pub fn mul_rational(&self, r: &Rational) -> Self {
        let mant = (&self.mant * r.numer()).div_floor(r.denom());
        let scale = r.numer().to_f64().unwrap_or(f64::INFINITY).abs()
            / r.denom().to_f64().unwrap_or(f64::INFINITY);
        BigReal {
            mant,
            bits: self.bits,
            err: err_up(self.err * scale + ulp(self.bits)),
        }
    }

    /// Quotient; requires the divisor to be bounded away from zero by more
    /// than its own error.
    pub fn div(&self, other: &Self) -> Self {
        let bits = self.bits.max(other.bits);
        let a = self.rescaled(bits);
        let b = other.rescaled(bits);
        assert!(
            b.to_f64().abs() > b.err,
            "division by a value not separated from zero"
        );
        let mant = (&a.mant << bits).div_floor(&b.mant);
        let denom_low = b.to_f64().abs() - b.err;
        let quot_mag = a.abs_upper() / denom_low;
        let err = err_up((a.err + quot_mag * b.err) / denom_low + ulp(bits));
        BigReal { mant, bits, err }
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut out = BigReal::one(self.bits);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Decimal rendering with the given number of fractional digits
    /// (display only; `err` remains the source of truth for accuracy).
    pub fn to_decimal(&self, frac_digits: usize) -> String {
        let negative = self.mant.is_negative();
        let abs = self.mant.abs();
        let scaled = floor_shr(&(abs * BigInt::from(10).pow(frac_digits as u32)), self.bits);
        let digits = scaled.to_string();
        let (int_part, frac_part) = if digits.len() > frac_digits {
            let split = digits.len() - frac_digits;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            (
                "0".to_string(),
                format!("{:0>width$}", digits, width = frac_digits),
            )
        };
        let sign = if negative { "-" } else { "" };
        if frac_digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// The stored value as an exact rational `mant / 2^bits`.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), BigInt::from(1) << self.bits)
    }
}

/// Shift right rounding toward negative infinity (floor), matching the
/// truncation model used in the error bounds.
fn floor_shr(v: &BigInt, shift: u32) -> BigInt {
    if v.is_negative() {
        // BigInt >> is a floor shift for the magnitude of negatives only in
        // two's-complement semantics; do it explicitly.
        let abs = v.abs();
        let shifted = &abs >> shift;
        let exact = (&shifted << shift) == abs;
        if exact {
            -shifted
        } else {
            -(shifted + BigInt::from(1))
        }
    } else {
        v >> shift
    }
}

/// Pi at the requested precision via Machin's formula
/// `pi = 16 atan(1/5) - 4 atan(1/239)`, with the alternating-series tails
/// and per-term floor truncations folded into the error bound.
pub fn pi(bits: u32) -> BigReal {
    assert!(bits <= MAX_BITS);
    let work = bits + 32;
    let (a5, t5) = atan_recip(5, work);
    let (a239, t239) = atan_recip(239, work);
    let mant = floor_shr(&(a5 * 16 - a239 * 4), 32);
    // each atan term carries <= 2 ulps of truncation, plus one tail term
    let err = err_up((16.0 * (t5 + 2.0) + 4.0 * (t239 + 2.0) + 2.0) * 2.0 * ulp(work) + ulp(bits));
    BigReal { mant, bits, err }
}

/// Scaled `atan(1/x)` and the number of series terms used.
fn atan_recip(x: u64, bits: u32) -> (BigInt, f64) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::from(1) << bits) / &x;
    let mut acc = power.clone();
    let mut terms = 1f64;
    let mut denom = BigInt::from(1);
    let mut subtract = true;
    loop {
        power /= &x2;
        denom += 2;
        if power.is_zero() {
            break;
        }
        let term = &power / &denom;
        if subtract {
            acc -= term;
        } else {
            acc += term;
        }
        subtract = !subtract;
        terms += 1.0;
    }
    (acc, terms)
}
