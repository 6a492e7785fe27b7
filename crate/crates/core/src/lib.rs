//! Minimal forbidden factors of the infinite Fibonacci word and the
//! correlation polynomials between them.
//!
//! The crate builds the families `F_n`, `f_n`, `p_n` and `M_n`
//! ([`family`]), computes correlations of arbitrary binary words from the
//! definition ([`correlation`]), constructs the border sets `B_n` three ways
//! ([`borders`]), evaluates the closed-form correlation polynomials
//! ([`closed_form`]) and counts words avoiding finite pattern sets
//! ([`avoid`]). [`verify`] cross-checks all of them.
//!
//! Polynomials and count tables are generic over an unsigned integer scalar
//! (anything with checked addition); the aliases below fix the usual choices.

pub mod avoid;
pub mod borders;
pub mod closed_form;
pub mod correlation;
pub mod error;
pub mod family;
pub mod poly;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::{BorderSet, Word};

use num_bigint::BigUint;

/// Correlation polynomial with 64-bit coefficients.
pub type CorrelationPolynomial = poly::Polynomial<u64>;

/// Correlation matrix with 64-bit coefficients.
pub type CorrelationMatrix = closed_form::CorrelationMatrix<u64>;

/// Avoidance counts in 128 bits (exact up to word length 127).
pub type CountTable = avoid::CountTable<u128>;

/// Avoidance counts with arbitrary precision.
pub type BigCountTable = avoid::CountTable<BigUint>;
