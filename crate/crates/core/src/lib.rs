//! Exact kernel for the harmonic algebra on words over an additive alphabet,
//! together with an identity verifier and a high-precision evaluator for
//! nested zeta values.
//!
//! The crate has three layers:
//!
//! * **Exact algebra** ([`word`], [`index`], [`xy`], [`mletter`]): canonical
//!   Q-linear combinations of words, the harmonic product `star`, the
//!   interleaving product `sha`, and the block-sum transform `dmap`, plus the
//!   two-letter presentation and the triple-indexed alphabet.
//! * **Identities** ([`enumerate`], [`identities`], [`series`], [`verify`]):
//!   enumerative oracles for the structure maps, both sides of the
//!   two-parameter product identities, weight-truncated series and their
//!   closed forms, and a verifier producing structured reports.
//! * **Numerics** ([`numeric`]): exact Bernoulli numbers and even zeta
//!   values, arbitrary-precision evaluation of zeta and zeta-star values
//!   with certified error bounds, and rational reconstruction of pi-power
//!   coefficients.

pub mod enumerate;
pub mod error;
pub mod identities;
pub mod index;
pub mod mletter;
pub mod numeric;
pub mod rational;
pub mod series;
pub mod text;
pub mod verify;
pub mod word;
pub mod xy;

pub use error::{Error, Result};
pub use index::{Index, ZPoly, ZWord};
pub use mletter::{MLetter, MPoly, MWord};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use verify::VerifyReport;
pub use word::{bigsha, bigstar, Letter, Poly, Word};
