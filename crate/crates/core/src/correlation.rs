//! Correlation words and correlation polynomials of pairs of binary words.
//!
//! For `u` of length `n` and `v` of length `m`, position `k` of the correlation
//! of `u` over `v` is 1 iff `u[i] = v[j]` for every pair of valid indices with
//! `i = j + k`, i.e. iff `v` shifted right by `k` agrees with `u` wherever the
//! two overlap. The polynomial reads the word as coefficients of
//! `z^{n-1-k}`.

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Polynomial};
use crate::word::Word;

fn shift_agrees(u: &[u8], v: &[u8], k: usize) -> bool {
    // Every (i, j) with i = j + k, i < |u|, j < |v|.
    (0..v.len())
        .map(|j| (j + k, j))
        .take_while(|&(i, _)| i < u.len())
        .all(|(i, j)| u[i] == v[j])
}

/// Correlation word of `u` over `v`, of length `|u|`.
pub fn correlation(u: &Word, v: &Word) -> Result<Word> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (us, vs) = (u.as_slice(), v.as_slice());
    let bits = (0..us.len())
        .map(|k| u8::from(shift_agrees(us, vs, k)))
        .collect();
    Word::from_symbols(bits)
}

/// Reads a correlation word as `Σ_k c[k] z^{n-1-k}`.
pub fn polynomial_of<C: Coefficient>(corr: &Word) -> Polynomial<C> {
    let n = corr.len();
    let exponents = corr
        .iter()
        .enumerate()
        .filter(|&(_, bit)| bit == 1)
        .map(|(k, _)| (n - 1 - k) as u64);
    Polynomial::from_exponents(exponents).expect("0/1 coefficients cannot overflow")
}

/// Correlation polynomial of `u` over `v` with coefficients in `C`.
pub fn correlation_poly_in<C: Coefficient>(u: &Word, v: &Word) -> Result<Polynomial<C>> {
    Ok(polynomial_of(&correlation(u, v)?))
}

/// Correlation polynomial of `u` over `v`.
pub fn correlation_poly(u: &Word, v: &Word) -> Result<Polynomial<u64>> {
    correlation_poly_in(u, v)
}

/// Shift diagram: `u` on top, then one row per shift of `v` followed by the
/// corresponding correlation bit. Unused cells print as `-`.
pub fn shift_diagram(u: &Word, v: &Word) -> Result<String> {
    let corr = correlation(u, v)?;
    let width = u.len() + v.len() - 1;
    let cells = |offset: usize, w: &Word| -> String {
        (0..width)
            .map(|p| {
                if p >= offset && p - offset < w.len() {
                    char::from(b'0' + w.as_slice()[p - offset])
                } else {
                    '-'
                }
            })
            .map(String::from)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    out.push_str(&format!("u  {}  C\n", cells(0, u)));
    for (k, bit) in corr.iter().enumerate() {
        let label = if k == 0 { "v " } else { "  " };
        out.push_str(&format!("{label} {}  {bit}\n", cells(k, v)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn shift_table_example() {
        assert_eq!(
            correlation(&w("10100101"), &w("10101")).unwrap(),
            w("00000101")
        );
        let p = correlation_poly(&w("10100101"), &w("10101")).unwrap();
        assert_eq!(p, Polynomial::from_exponents([0, 2]).unwrap());
        assert_eq!(p.to_string(), "z^2 + 1");
    }

    #[test]
    fn small_examples() {
        assert_eq!(correlation(&w("0"), &w("0")).unwrap(), w("1"));
        assert_eq!(correlation(&w("11"), &w("000")).unwrap(), w("00"));
        assert_eq!(
            correlation_poly(&w("000"), &w("000")).unwrap().to_string(),
            "z^2 + z + 1"
        );
        assert!(correlation_poly(&w("0"), &w("1")).unwrap().is_zero());
    }

    #[test]
    fn longer_v_inside_u_still_correlates_at_interior_shifts() {
        // v is a factor of u: the definition sets interior positions.
        assert_eq!(correlation(&w("00100"), &w("1")).unwrap(), w("00100"));
        assert_eq!(correlation(&w("0110"), &w("11")).unwrap(), w("0100"));
    }

    #[test]
    fn empty_words_rejected() {
        assert_eq!(correlation(&Word::empty(), &w("0")), Err(Error::EmptyWord));
        assert_eq!(correlation(&w("0"), &Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn diagram_layout() {
        let d = shift_diagram(&w("10100101"), &w("10101")).unwrap();
        let lines: Vec<&str> = d.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0], "u  1 0 1 0 0 1 0 1 - - - -  C");
        assert_eq!(lines[1], "v  1 0 1 0 1 - - - - - - -  0");
        assert_eq!(lines[6], "   - - - - - 1 0 1 0 1 - -  1");
        assert_eq!(lines[8], "   - - - - - - - 1 0 1 0 1  1");
    }
}
