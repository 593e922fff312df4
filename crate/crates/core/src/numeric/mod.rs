//! High-precision numeric evaluation: exact Bernoulli numbers and even zeta
//! coefficients, certified evaluation of nested zeta values and their
//! weakly-decreasing variants, and rational reconstruction of pi-power
//! coefficients.

pub mod bernoulli;
pub mod eval;
pub mod mzv;
pub mod real;
pub mod reconstruct;

pub use bernoulli::{bernoulli, zeta_even_exact, BernoulliTable};
pub use eval::{bb_star_sum, eval_z, eval_zbar, mzsv_numeric};
pub use mzv::{mzv_numeric, zeta_star_partial, zeta_star_tail_bound, MIN_TARGET_ERR};
pub use real::{pi, BigReal, MAX_BITS};
pub use reconstruct::reconstruct_rational;
