//! The indexed families built from the Fibonacci morphism `0 ↦ 01, 1 ↦ 0`:
//! Fibonacci numbers `F_n`, finite Fibonacci words `f_n`, palindromic
//! prefixes `p_n` and minimal forbidden factors `M_n`.
//!
//! Indexing: `F_1 = F_2 = 1`, `f_1 = 1`, `f_2 = 0`, `f_{n+2} = f_{n+1} f_n`,
//! `p_n = f_n` without its last two symbols, and `M_n = 1 p_n 1` for odd `n`,
//! `M_n = 0 p_n 0` for even `n`. The `p` and `M` families start at `n = 3`.

use num_traits::{CheckedAdd, One, Zero};

use crate::error::{Error, Result};
use crate::word::Word;

/// Largest index whose Fibonacci number is accepted (`F_92 < 2^63`).
pub const MAX_FIB_INDEX: u32 = 92;

/// Largest index for which words are materialized (`F_30 <= 2^20`).
pub const MAX_WORD_INDEX: u32 = 30;

/// Smallest index of the `p_n`, `M_n` and `B_n` families.
pub const MIN_FAMILY_INDEX: u32 = 3;

pub(crate) fn check_index(n: u32, min: u32, max: u32, what: &'static str) -> Result<()> {
    if n < min || n > max {
        return Err(Error::IndexOutOfRange {
            index: n,
            min,
            max,
            what,
        });
    }
    Ok(())
}

/// `F_n` in any integer type with checked addition. Returns
/// [`Error::Overflow`] instead of wrapping when `T` is too narrow. No upper
/// index cap is applied here.
pub fn fib_number_in<T>(n: u32) -> Result<T>
where
    T: Zero + One + CheckedAdd + Clone,
{
    if n < 1 {
        return Err(Error::IndexOutOfRange {
            index: n,
            min: 1,
            max: u32::MAX,
            what: "Fibonacci number",
        });
    }
    // (F_{k-1}, F_k) starting at k = 1 with F_0 = 0.
    let (mut prev, mut cur) = (T::zero(), T::one());
    for _ in 1..n {
        let next = prev
            .checked_add(&cur)
            .ok_or(Error::Overflow("Fibonacci number"))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `F_n` for `1 <= n <= 92`.
pub fn fib_number(n: u32) -> Result<u64> {
    check_index(n, 1, MAX_FIB_INDEX, "Fibonacci number")?;
    fib_number_in::<u64>(n)
}

/// Image of `w` under the Fibonacci morphism.
pub fn phi(w: &Word) -> Word {
    let mut out = Vec::with_capacity(2 * w.len());
    for s in w.iter() {
        if s == 0 {
            out.extend_from_slice(&[0, 1]);
        } else {
            out.push(0);
        }
    }
    Word::from_symbols(out).expect("morphism images are binary")
}

/// The unique preimage of `w` under [`phi`].
///
/// Parses left to right: `01` decodes to `0`, a lone `0` decodes to `1`, and
/// anything else means `w` has no preimage.
pub fn phi_inverse(w: &Word) -> Result<Word> {
    let s = w.as_slice();
    let mut out = Vec::with_capacity(s.len());
    let mut i = 0;
    while i < s.len() {
        match (s[i], s.get(i + 1)) {
            (0, Some(1)) => {
                out.push(0);
                i += 2;
            }
            (0, _) => {
                out.push(1);
                i += 1;
            }
            _ => return Err(Error::NotInImage),
        }
    }
    Word::from_symbols(out)
}

/// The finite Fibonacci word `f_n`, `1 <= n <= 30`.
pub fn fib_word(n: u32) -> Result<Word> {
    check_index(n, 1, MAX_WORD_INDEX, "Fibonacci word")?;
    let (mut older, mut newer) = (Word::symbol(1), Word::symbol(0));
    if n == 1 {
        return Ok(older);
    }
    for _ in 2..n {
        let next = newer.concat(&older);
        older = newer;
        newer = next;
    }
    Ok(newer)
}

/// The palindromic prefix `p_n`, `3 <= n <= 30`.
pub fn palindromic_prefix(n: u32) -> Result<Word> {
    check_index(n, MIN_FAMILY_INDEX, MAX_WORD_INDEX, "palindromic prefix")?;
    let f = fib_word(n)?;
    Ok(f.prefix(f.len() - 2))
}

/// The minimal forbidden factor `M_n`, `3 <= n <= 30`.
pub fn min_forbidden(n: u32) -> Result<Word> {
    check_index(
        n,
        MIN_FAMILY_INDEX,
        MAX_WORD_INDEX,
        "minimal forbidden word",
    )?;
    let delimiter = if n % 2 == 1 { 1 } else { 0 };
    Ok(palindromic_prefix(n)?
        .prepended(delimiter)
        .appended(delimiter))
}
