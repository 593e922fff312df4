//! Exact rational coefficients.
//!
//! All coefficients in the algebra are elements of Q, stored as
//! arbitrary-precision rationals that are always reduced to lowest terms
//! with a positive denominator (`num_rational` maintains both invariants).

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// (-1)^k as a rational.
pub fn sign_pow(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Renders as `p/q`, omitting `/q` when the denominator is one.
pub fn render(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
