//! Correlation polynomials between minimal forbidden words without touching
//! the words' correlation definition: once from shared borders, once from the
//! Fibonacci-number closed form.

use crate::borders::border_intersection;
use crate::error::{Error, Result};
use crate::family::{check_index, fib_number, MAX_FIB_INDEX, MIN_FAMILY_INDEX};
use crate::poly::{Coefficient, Polynomial};

/// `C_{M_n,M_m}(z)` as `Σ z^{|b|-1}` over the borders shared by `M_n` and `M_m`.
pub fn corr_poly_via_borders<C: Coefficient>(n: u32, m: u32) -> Result<Polynomial<C>> {
    let shared = border_intersection(n, m)?;
    Polynomial::from_exponents(shared.iter().map(|b| b.len() as u64 - 1))
}

fn fib_minus_one(k: u32) -> Result<u64> {
    Ok(fib_number(k)? - 1)
}

/// Exponents of the non-leading part of the diagonal polynomial for index `n`:
/// `Σ_{i<a} z^{F_{2(a-i)}-1}` for `n = 2a+1`, `Σ_{i<=a} z^{F_{2(a-i)+1}-1}` for `n = 2a+2`.
fn tail_exponents(n: u32) -> Result<Vec<u64>> {
    if n % 2 == 1 {
        let a = (n - 1) / 2;
        (0..a).map(|i| fib_minus_one(2 * (a - i))).collect()
    } else {
        let a = (n - 2) / 2;
        (0..=a).map(|i| fib_minus_one(2 * (a - i) + 1)).collect()
    }
}

/// `C_{M_n,M_m}(z)` from the closed form, valid for `3 <= n, m <= 92`.
///
/// Opposite parities give 0. Equal indices give `z^{F_n-1}` plus the tail of
/// `n`. Distinct indices of equal parity give the tail of the smaller index.
pub fn corr_poly_closed<C: Coefficient>(n: u32, m: u32) -> Result<Polynomial<C>> {
    check_index(
        n,
        MIN_FAMILY_INDEX,
        MAX_FIB_INDEX,
        "closed-form correlation",
    )?;
    check_index(
        m,
        MIN_FAMILY_INDEX,
        MAX_FIB_INDEX,
        "closed-form correlation",
    )?;
    if n % 2 != m % 2 {
        return Ok(Polynomial::zero());
    }
    let small = n.min(m);
    let mut exponents = tail_exponents(small)?;
    if n == m {
        exponents.push(fib_minus_one(n)?);
    }
    Polynomial::from_exponents(exponents)
}

/// Largest matrix size whose entries stay inside the closed form's range.
pub const MAX_MATRIX_SIZE: usize = (MAX_FIB_INDEX - 2) as usize;

/// Square matrix of closed-form correlation polynomials. Row/column `i`
/// (1-based) corresponds to `M_{i+2}`, so entry `(1, 1)` is `C_{M_3,M_3}`.
#[derive(Clone, PartialEq, Eq)]
pub struct CorrelationMatrix<C> {
    rows: Vec<Vec<Polynomial<C>>>,
}

/// Family index represented by 1-based matrix index `i`.
pub fn matrix_family_index(i: usize) -> u32 {
    i as u32 + 2
}

pub fn correlation_matrix<C: Coefficient>(size: usize) -> Result<CorrelationMatrix<C>> {
    if size == 0 || size > MAX_MATRIX_SIZE {
        return Err(Error::MatrixSize {
            size,
            max: MAX_MATRIX_SIZE,
        });
    }
    let rows = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| corr_poly_closed(matrix_family_index(i), matrix_family_index(j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorrelationMatrix { rows })
}

impl<C: Coefficient> std::fmt::Debug for CorrelationMatrix<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

impl<C: Coefficient> CorrelationMatrix<C> {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<C> {
        &self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Polynomial<C>>] {
        &self.rows
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.size();
        (0..k).all(|i| (0..k).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Plain text: one row per line, cells right-aligned per column and
    /// separated by ` | `.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.size())
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(&line.join(" | "));
            out.push('\n');
        }
        out
    }

    /// LaTeX `array` wrapped in parentheses, right-aligned columns.
    pub fn to_latex(&self) -> String {
        let mut out = format!("\\left(\\begin{{array}}{{{}}}\n", "r".repeat(self.size()));
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(Polynomial::to_latex)
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect();
        out.push_str(&lines.join(" \\\\\n"));
        out.push_str("\n\\end{array}\\right)\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<u64>;

    #[test]
    fn via_borders_examples() {
        assert_eq!(
            corr_poly_via_borders::<u64>(5, 5).unwrap().to_string(),
            "z^4 + z^2 + 1"
        );
        assert_eq!(corr_poly_via_borders::<u64>(3, 5).unwrap().to_string(), "1");
        assert!(corr_poly_via_borders::<u64>(4, 7).unwrap().is_zero());
    }

    #[test]
    fn closed_examples() {
        assert_eq!(
            corr_poly_closed::<u64>(8, 8).unwrap().to_string(),
            "z^20 + z^12 + z^4 + z + 1"
        );
        assert_eq!(corr_poly_closed::<u64>(4, 6).unwrap().to_string(), "z + 1");
        assert_eq!(
            corr_poly_closed::<u64>(6, 6).unwrap().to_string(),
            "z^7 + z^4 + z + 1"
        );
        assert!(corr_poly_closed::<u64>(3, 92).unwrap().is_zero());
    }

    #[test]
    fn closed_form_far_indices() {
        // Even pair 40 < 42: tail of 40 = 2a+2 with a = 19: F_{2(19-i)+1} - 1 for i in 0..=19.
        let p: P = corr_poly_closed(40, 42).unwrap();
        let expected: Vec<u64> = (0..=19u32)
            .map(|i| fib_number(2 * (19 - i) + 1).unwrap() - 1)
            .collect();
        assert_eq!(p.exponents(), expected);
        assert_eq!(p.exponents()[0], 63_245_985); // F_39 - 1
        assert_eq!(p, corr_poly_closed(42, 40).unwrap());
    }

    #[test]
    fn closed_form_rejects_out_of_range() {
        assert!(matches!(
            corr_poly_closed::<u64>(93, 93),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            corr_poly_closed::<u64>(2, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(corr_poly_closed::<u64>(92, 92).is_ok());
    }

    #[test]
    fn small_matrices() {
        let m1 = correlation_matrix::<u64>(1).unwrap();
        assert_eq!(m1.entry(1, 1).to_string(), "z + 1");
        let m2 = correlation_matrix::<u64>(2).unwrap();
        let texts: Vec<String> = m2.rows().iter().flatten().map(|p| p.to_string()).collect();
        assert_eq!(texts, ["z + 1", "0", "0", "z^2 + z + 1"]);
        assert!(correlation_matrix::<u64>(0).is_err());
        assert!(correlation_matrix::<u64>(MAX_MATRIX_SIZE).is_ok());
        assert!(correlation_matrix::<u64>(MAX_MATRIX_SIZE + 1).is_err());
    }

    #[test]
    fn matrix_text_layout() {
        let m = correlation_matrix::<u64>(2).unwrap();
        assert_eq!(m.to_text(), "z + 1 |           0\n    0 | z^2 + z + 1\n");
        assert_eq!(
            m.to_latex(),
            "\\left(\\begin{array}{rr}\nz + 1 & 0 \\\\\n0 & z^{2} + z + 1\n\\end{array}\\right)\n"
        );
    }
}
