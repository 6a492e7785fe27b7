//! Sparse univariate polynomials in `z` with exact nonnegative coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{CheckedAdd, One, Zero};

use crate::error::{Error, Result};

/// Scalar usable as a polynomial coefficient or a count.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + CheckedAdd
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + CheckedAdd
{
}

/// Polynomial in `z` stored as a map from exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    terms: BTreeMap<u64, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    /// `z^exponent`
    pub fn monomial(exponent: u64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(exponent, C::one());
        Polynomial { terms }
    }

    /// Sum of `z^e` over the given exponents. Repeated exponents accumulate.
    pub fn from_exponents(exponents: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut p = Self::zero();
        for e in exponents {
            p.add_term(e, C::one())?;
        }
        Ok(p)
    }

    /// Adds `coeff · z^exponent` in place.
    pub fn add_term(&mut self, exponent: u64, coeff: C) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.get(&exponent) {
            Some(existing) => existing
                .checked_add(&coeff)
                .ok_or(Error::Overflow("polynomial coefficient"))?,
            None => coeff,
        };
        self.terms.insert(exponent, sum);
        Ok(())
    }

    pub fn coefficient(&self, exponent: u64) -> C {
        self.terms.get(&exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    /// Exponents in descending order.
    pub fn exponents(&self) -> Vec<u64> {
        self.terms.keys().rev().copied().collect()
    }

    /// `(exponent, coefficient)` pairs in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &C)> {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    /// The polynomial with the `z^exponent` term removed.
    pub fn without_term(&self, exponent: u64) -> Self {
        let mut terms = self.terms.clone();
        terms.remove(&exponent);
        Polynomial { terms }
    }

    /// Whether every stored coefficient equals one.
    pub fn is_zero_one(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    /// LaTeX rendering: `z^{20} + z^{12} + z + 1`.
    pub fn to_latex(&self) -> String {
        self.render(|e| format!("z^{{{e}}}"), " ")
    }

    fn render(&self, power: impl Fn(u64) -> String, coeff_sep: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let var = match e {
                    0 => String::new(),
                    1 => "z".to_owned(),
                    e => power(e),
                };
                match (c.is_one(), e) {
                    (_, 0) => c.to_string(),
                    (true, _) => var,
                    (false, _) => format!("{c}{coeff_sep}{var}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Plain-text rendering with descending exponents: `z^4 + z^2 + 1`, `z + 1`, `0`.
impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|e| format!("z^{e}"), "*"))
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
