//! Bernoulli numbers under the `t e^t / (e^t - 1)` generating function
//! (so `B_1 = +1/2`), and the exact rational coefficients of even zeta
//! values as multiples of powers of pi.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Growable cache of Bernoulli numbers.
///
/// Matching the generating function `sum B_m t^m / m! = t e^t / (e^t - 1)`
/// term by term gives, for `k >= 1`,
/// `B_k = 1 - (1/(k+1)) * sum_{j=2}^{k+1} C(k+1, j) B_{k+1-j}`.
#[derive(Debug, Default)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: vec![rat(1)],
        }
    }

    pub fn get(&mut self, n: usize) -> Rational {
        while self.values.len() <= n {
            let k = self.values.len();
            let m = k + 1;
            let mut sum = Rational::from_integer(0.into());
            for j in 2..=m {
                let binom: BigInt = num_integer::binomial(BigInt::from(m), BigInt::from(j));
                sum += Rational::from_integer(binom) * &self.values[m - j];
            }
            let value = rat(1) - sum / Rational::from_integer(BigInt::from(m));
            self.values.push(value);
        }
        self.values[n].clone()
    }
}

/// The n-th Bernoulli number (`B_1 = +1/2` convention).
pub fn bernoulli(n: usize) -> Rational {
    BernoulliTable::new().get(n)
}

/// The exact rational `q` with `zeta(2k) = q * pi^(2k)`, from
/// `zeta(2k) = -B_2k (2 pi sqrt(-1))^(2k) / (2 (2k)!)`.
pub fn zeta_even_exact(two_k: u32) -> Result<Rational> {
    if two_k == 0 || !two_k.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "even zeta values need a positive even argument, got {two_k}"
        )));
    }
    let k = two_k / 2;
    let b = bernoulli(two_k as usize);
    let mut factorial = BigInt::one();
    for i in 1..=two_k {
        factorial *= i;
    }
    let sign = if k.is_multiple_of(2) { rat(-1) } else { rat(1) };
    let power = Rational::from_integer(BigInt::from(1) << (two_k - 1));
    Ok(sign * b * power / Rational::from_integer(factorial))
}
