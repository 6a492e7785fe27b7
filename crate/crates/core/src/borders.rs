//! Border sets `B_n` of the minimal forbidden words `M_n`.
//!
//! Three constructions share one contract: the brute-force oracle applied to
//! `M_n`, the morphic recursion starting at `B_3 = {1, 11}`, and the closed
//! form assembled from palindromic prefixes.

use crate::error::Result;
use crate::family::{
    check_index, fib_number, min_forbidden, palindromic_prefix, phi, MAX_FIB_INDEX, MAX_WORD_INDEX,
    MIN_FAMILY_INDEX,
};
use crate::word::{borders_bruteforce, BorderSet, Word};

fn check_family(n: u32) -> Result<()> {
    check_index(n, MIN_FAMILY_INDEX, MAX_WORD_INDEX, "border set")
}

fn base_border_set() -> BorderSet {
    BorderSet::from_words([Word::symbol(1), Word::repeat(1, 2)])
}

/// One recursion step: `B_{k+1}` from `B_k`.
///
/// Odd `k`: `B_{k+1} = {0} ∪ {φ(b)0 : b ∈ B_k}`.
/// Even `k`: `B_{k+1} = {0⁻¹φ(b) : b ∈ B_k}`.
pub fn next_border_set(k: u32, current: &BorderSet) -> Result<BorderSet> {
    if k % 2 == 1 {
        let lifted = current.iter().map(|b| phi(b).appended(0));
        Ok(BorderSet::from_words(
            std::iter::once(Word::symbol(0)).chain(lifted),
        ))
    } else {
        let lifted = current
            .iter()
            .map(|b| phi(b).strip_first(0))
            .collect::<Result<Vec<_>>>()?;
        Ok(BorderSet::from_words(lifted))
    }
}

/// `B_3, B_4, ..., B_max` built by the recursion, each level from the previous.
pub fn border_sets_recursive(max: u32) -> Result<Vec<BorderSet>> {
    check_family(max)?;
    let mut levels = vec![base_border_set()];
    for k in MIN_FAMILY_INDEX..max {
        let next = next_border_set(k, levels.last().expect("nonempty"))?;
        levels.push(next);
    }
    Ok(levels)
}

/// `B_n` by iterating the recursion from `B_3`.
pub fn border_set_recursive(n: u32) -> Result<BorderSet> {
    Ok(border_sets_recursive(n)?.pop().expect("nonempty"))
}

/// `B_n` by brute-force enumeration of the borders of `M_n`.
pub fn border_set_bruteforce(n: u32) -> Result<BorderSet> {
    check_family(n)?;
    borders_bruteforce(&min_forbidden(n)?)
}

/// `B_n` assembled directly from the closed form.
///
/// Even `n = 2k+2`: `{0, M_n} ∪ {0 p_{2(k-i)+1} 0 : 0 <= i < k}`.
/// Odd `n = 2k+3`: `{1, M_n} ∪ {1 p_{2(k-i)+2} 1 : 0 <= i < k}`.
pub fn border_set_closed(n: u32) -> Result<BorderSet> {
    check_family(n)?;
    if n == MIN_FAMILY_INDEX {
        return Ok(base_border_set());
    }
    let (delimiter, k, offset) = if n.is_multiple_of(2) {
        (0, (n - 2) / 2, 1)
    } else {
        (1, (n - 3) / 2, 2)
    };
    let mut members = vec![Word::symbol(delimiter), min_forbidden(n)?];
    for i in 0..k {
        let p = palindromic_prefix(2 * (k - i) + offset)?;
        members.push(p.prepended(delimiter).appended(delimiter));
    }
    Ok(BorderSet::from_words(members))
}

/// Member lengths of `B_n` predicted by the closed form, ascending, using only
/// Fibonacci numbers. Valid for `3 <= n <= 92`.
pub fn predicted_border_lengths(n: u32) -> Result<Vec<u64>> {
    check_index(n, MIN_FAMILY_INDEX, MAX_FIB_INDEX, "border lengths")?;
    let mut lengths = vec![1, fib_number(n)?];
    if n > MIN_FAMILY_INDEX {
        let (k, offset) = if n.is_multiple_of(2) {
            ((n - 2) / 2, 1)
        } else {
            ((n - 3) / 2, 2)
        };
        for i in 0..k {
            lengths.push(fib_number(2 * (k - i) + offset)?);
        }
    }
    lengths.sort_unstable();
    Ok(lengths)
}

/// `|B_n|`: 2 for `n = 3`, otherwise `k + 2` for `n = 2k+2` or `n = 2k+3`.
pub fn predicted_cardinality(n: u32) -> Result<usize> {
    check_index(n, MIN_FAMILY_INDEX, MAX_FIB_INDEX, "border set cardinality")?;
    Ok(if n == MIN_FAMILY_INDEX {
        2
    } else {
        (n as usize - 2) / 2 + 2
    })
}

/// `B_n ∩ B_m`, computed by intersecting the recursively built sets.
pub fn border_intersection(n: u32, m: u32) -> Result<BorderSet> {
    check_family(n)?;
    check_family(m)?;
    let levels = border_sets_recursive(n.max(m))?;
    let at = |i: u32| &levels[(i - MIN_FAMILY_INDEX) as usize];
    Ok(at(n).intersection(at(m)))
}
