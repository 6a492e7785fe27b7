//! Runs every structural identity of the crate up to a chosen family index and
//! reports one outcome per check.
//!
//! Each check compares two independent computations (a definition against a
//! construction, a recursion against a closed form, a DP against exhaustive
//! enumeration) and stops at the first disagreement it finds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::avoid::{count_avoiding, count_avoiding_bruteforce, min_forbidden_family};
use crate::borders::{
    border_intersection, border_set_bruteforce, border_set_closed, border_sets_recursive,
    predicted_border_lengths, predicted_cardinality,
};
use crate::closed_form::{corr_poly_closed, corr_poly_via_borders};
use crate::correlation::{correlation, correlation_poly};
use crate::error::{Error, Result};
use crate::family::{
    fib_number, fib_word, min_forbidden, palindromic_prefix, phi, phi_inverse, MAX_WORD_INDEX,
    MIN_FAMILY_INDEX,
};
use crate::word::{borders_bruteforce, is_factor, is_palindrome, Word};

pub const DEFAULT_MAX_INDEX: u32 = 12;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    /// First failure found, if any.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type CheckResult = std::result::Result<usize, String>;

fn ensure(
    cond: bool,
    cases: &mut usize,
    msg: impl FnOnce() -> String,
) -> std::result::Result<(), String> {
    *cases += 1;
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// A random palindrome of length `1..=max_len`.
pub fn random_palindrome(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    let half: Vec<u8> = (0..len.div_ceil(2)).map(|_| rng.gen_range(0..=1)).collect();
    let mut symbols = half.clone();
    symbols.extend(half.iter().rev().skip(len % 2));
    Word::from_symbols(symbols).expect("binary")
}

/// A random word of length `0..=max_len`.
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_symbols((0..len).map(|_| rng.gen_range(0..=1)).collect()).expect("binary")
}

fn check_fibonacci_words(max: u32) -> CheckResult {
    let mut cases = 0;
    let top = (max + 1).min(MAX_WORD_INDEX);
    for n in 1..top {
        let f = lift(fib_word(n))?;
        let len = lift(fib_number(n))?;
        ensure(f.len() as u64 == len, &mut cases, || {
            format!("|f_{n}| != F_{n}")
        })?;
        let next = lift(fib_word(n + 1))?;
        ensure(phi(&f) == next, &mut cases, || {
            format!("phi(f_{n}) != f_{}", n + 1)
        })?;
    }
    Ok(cases)
}

fn check_prefix_morphism(max: u32) -> CheckResult {
    let mut cases = 0;
    for n in MIN_FAMILY_INDEX..max.min(MAX_WORD_INDEX) {
        let lhs = phi(&lift(palindromic_prefix(n))?).appended(0);
        let rhs = lift(palindromic_prefix(n + 1))?;
        ensure(lhs == rhs, &mut cases, || {
            format!("phi(p_{n})0 != p_{}", n + 1)
        })?;
    }
    Ok(cases)
}

fn check_prefix_splittings(max: u32) -> CheckResult {
    let mut cases = 0;
    let p = |i: u32| lift(palindromic_prefix(i));
    let w01: Word = "01".parse().expect("literal");
    let w10: Word = "10".parse().expect("literal");
    // p_{2k+1} and p_{2k+2} need p_{2k-1} with index >= 3, so k >= 2.
    let mut k = 2;
    while 2 * k < max.min(MAX_WORD_INDEX) {
        let (a, b, c) = (p(2 * k - 1)?, p(2 * k)?, p(2 * k + 1)?);
        ensure(a.concat(&w01).concat(&b) == c, &mut cases, || {
            format!("p_{} split 1", 2 * k + 1)
        })?;
        ensure(b.concat(&w10).concat(&a) == c, &mut cases, || {
            format!("p_{} split 2", 2 * k + 1)
        })?;
        if 2 * k + 2 <= max.min(MAX_WORD_INDEX) {
            let d = p(2 * k + 2)?;
            ensure(b.concat(&w10).concat(&c) == d, &mut cases, || {
                format!("p_{} split 1", 2 * k + 2)
            })?;
            ensure(c.concat(&w01).concat(&b) == d, &mut cases, || {
                format!("p_{} split 2", 2 * k + 2)
            })?;
        }
        k += 1;
    }
    Ok(cases)
}

fn check_forbidden_morphism(max: u32) -> CheckResult {
    let mut cases = 0;
    let p = |i: u32| lift(palindromic_prefix(i));
    let m = |i: u32| lift(min_forbidden(i));
    let top = max.min(MAX_WORD_INDEX);
    let mut k = 1;
    while 2 * k + 2 <= top {
        // 1 p_{2k+2} 1  ->  0 p_{2k+3} 0
        if 2 * k + 3 <= top {
            let lhs = phi(&p(2 * k + 2)?.prepended(1).appended(1)).appended(0);
            ensure(
                lhs == p(2 * k + 3)?.prepended(0).appended(0),
                &mut cases,
                || format!("phi(1 p_{} 1)0", 2 * k + 2),
            )?;
        }
        // 0^-1 phi(0 p_{2k+1} 0) = 1 p_{2k+2} 1
        let lhs = lift(phi(&p(2 * k + 1)?.prepended(0).appended(0)).strip_first(0))?;
        ensure(
            lhs == p(2 * k + 2)?.prepended(1).appended(1),
            &mut cases,
            || format!("0^-1 phi(0 p_{} 0)", 2 * k + 1),
        )?;
        ensure(
            phi(&m(2 * k + 1)?).appended(0) == m(2 * k + 2)?,
            &mut cases,
            || format!("phi(M_{})0 != M_{}", 2 * k + 1, 2 * k + 2),
        )?;
        if 2 * k + 3 <= top {
            let lhs = lift(phi(&m(2 * k + 2)?).strip_first(0))?;
            ensure(lhs == m(2 * k + 3)?, &mut cases, || {
                format!("0^-1 phi(M_{}) != M_{}", 2 * k + 2, 2 * k + 3)
            })?;
        }
        k += 1;
    }
    Ok(cases)
}

fn check_family_palindromes(max: u32) -> CheckResult {
    let mut cases = 0;
    for n in MIN_FAMILY_INDEX..=max.min(MAX_WORD_INDEX) {
        ensure(
            is_palindrome(&lift(palindromic_prefix(n))?),
            &mut cases,
            || format!("p_{n}"),
        )?;
        ensure(is_palindrome(&lift(min_forbidden(n))?), &mut cases, || {
            format!("M_{n}")
        })?;
    }
    Ok(cases)
}

/// Host word for the minimality spot-check of `M_3..=M_max`.
pub fn minimality_host(max: u32) -> Result<Word> {
    fib_word((max + 4).min(MAX_WORD_INDEX))
}

fn check_minimality(max: u32) -> CheckResult {
    let mut cases = 0;
    let top = max.min(MAX_WORD_INDEX - 4);
    let host = lift(minimality_host(top))?;
    for n in MIN_FAMILY_INDEX..=top {
        let word = lift(min_forbidden(n))?;
        let l = word.len() - 1;
        ensure(!is_factor(&word, &host), &mut cases, || {
            format!("M_{n} occurs in host")
        })?;
        ensure(is_factor(&word.prefix(l), &host), &mut cases, || {
            format!("prefix of M_{n} absent")
        })?;
        ensure(is_factor(&word.suffix(l), &host), &mut cases, || {
            format!("suffix of M_{n} absent")
        })?;
    }
    Ok(cases)
}

fn check_phi_roundtrip(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut cases = 0;
    for _ in 0..samples {
        let w = random_word(rng, 64);
        let image = phi(&w);
        let back = lift(phi_inverse(&image))?;
        ensure(back == w, &mut cases, || {
            format!("phi_inverse(phi({w})) = {back}")
        })?;
        ensure(phi(&back) == image, &mut cases, || {
            format!("phi(phi_inverse({image}))")
        })?;
    }
    Ok(cases)
}

/// Suffix of `u` of length `len` equals the prefix of `v` of length `len`.
fn overlap_matches(u: &Word, v: &Word, len: usize) -> bool {
    len <= v.len() && u.suffix(len) == v.prefix(len)
}

fn check_overlap_lemmas(max: u32) -> CheckResult {
    let mut cases = 0;
    let words = (MIN_FAMILY_INDEX..=max.min(MAX_WORD_INDEX))
        .map(|i| lift(min_forbidden(i)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    for u in &words {
        for v in &words {
            let c = lift(correlation(u, v))?;
            let (n, m) = (u.len(), v.len());
            if n <= m {
                for k in 0..n {
                    let expect = overlap_matches(u, v, n - k);
                    ensure((c.get(k) == Some(1)) == expect, &mut cases, || {
                        format!("short-over-long overlap at k={k} for {u} over {v}")
                    })?;
                }
            } else if !is_factor(v, u) {
                for k in 0..n {
                    let expect = k > n - m && overlap_matches(u, v, n - k);
                    ensure((c.get(k) == Some(1)) == expect, &mut cases, || {
                        format!("long-over-short overlap at k={k} for {u} over {v}")
                    })?;
                }
            }
        }
    }
    Ok(cases)
}

fn transpose_holds(u: &Word, v: &Word) -> Result<bool> {
    let (short, long) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    let forward = correlation(short, long)?;
    let backward = correlation(long, short)?;
    let offset = long.len() - short.len();
    Ok(forward == backward.slice(offset, long.len()))
}

fn check_palindrome_transpose(max: u32, rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut cases = 0;
    let top = max.min(MAX_WORD_INDEX);
    for i in MIN_FAMILY_INDEX..=top {
        for j in i..=top {
            let (u, v) = (lift(min_forbidden(i))?, lift(min_forbidden(j))?);
            ensure(lift(transpose_holds(&u, &v))?, &mut cases, || {
                format!("(M_{i}, M_{j})")
            })?;
        }
    }
    for _ in 0..samples {
        let (u, v) = (random_palindrome(rng, 64), random_palindrome(rng, 64));
        ensure(lift(transpose_holds(&u, &v))?, &mut cases, || {
            format!("({u}, {v})")
        })?;
    }
    Ok(cases)
}

fn check_autocorrelation(max: u32) -> CheckResult {
    let mut cases = 0;
    for n in MIN_FAMILY_INDEX..=max.min(MAX_WORD_INDEX) {
        let w = lift(min_forbidden(n))?;
        let c = lift(correlation(&w, &w))?;
        let borders = lift(borders_bruteforce(&w))?.lengths();
        ensure(c.get(0) == Some(1), &mut cases, || {
            format!("C_(M_{n},M_{n})[0] != 1")
        })?;
        for k in 0..w.len() {
            let has = borders.contains(&(w.len() - k));
            ensure((c.get(k) == Some(1)) == has, &mut cases, || {
                format!("autocorrelation of M_{n} at k={k}")
            })?;
        }
    }
    Ok(cases)
}

fn check_border_agreement(max: u32) -> CheckResult {
    let mut cases = 0;
    let top = max.min(MAX_WORD_INDEX);
    let recursive = lift(border_sets_recursive(top))?;
    for (offset, rec) in recursive.iter().enumerate() {
        let n = MIN_FAMILY_INDEX + offset as u32;
        let brute = lift(border_set_bruteforce(n))?;
        let closed = lift(border_set_closed(n))?;
        ensure(*rec == brute, &mut cases, || {
            format!("recursive B_{n} != brute force")
        })?;
        ensure(closed == brute, &mut cases, || {
            format!("closed B_{n} != brute force")
        })?;
        ensure(
            brute.len() == lift(predicted_cardinality(n))?,
            &mut cases,
            || format!("|B_{n}| != predicted"),
        )?;
        let lengths: Vec<u64> = brute.lengths().iter().map(|&l| l as u64).collect();
        ensure(
            lengths == lift(predicted_border_lengths(n))?,
            &mut cases,
            || format!("B_{n} lengths != predicted"),
        )?;
    }
    Ok(cases)
}

fn check_border_transport(max: u32) -> CheckResult {
    let mut cases = 0;
    let top = max.min(MAX_WORD_INDEX);
    let sets = lift(border_sets_recursive(top))?;
    let b = |i: u32| &sets[(i - MIN_FAMILY_INDEX) as usize];
    let borders_word = |i: u32, w: &Word| -> std::result::Result<bool, String> {
        let m = lift(min_forbidden(i))?;
        Ok(!w.is_empty() && m.starts_with(w) && m.ends_with(w))
    };
    let mut k = 1;
    while 2 * k + 2 <= top {
        let (odd, even) = (2 * k + 1, 2 * k + 2);
        for w in b(odd) {
            let img = phi(w).appended(0);
            ensure(borders_word(even, &img)?, &mut cases, || {
                format!("(a) {w} in B_{odd}")
            })?;
        }
        for w in b(even) {
            if w.len() > 1 {
                let pre = lift(phi_inverse(&lift(w.strip_last(0))?))?;
                ensure(borders_word(odd, &pre)?, &mut cases, || {
                    format!("(d) {w} in B_{even}")
                })?;
            }
        }
        if even < top {
            let next = even + 1;
            for w in b(even) {
                let img = lift(phi(w).strip_first(0))?;
                ensure(borders_word(next, &img)?, &mut cases, || {
                    format!("(b) {w} in B_{even}")
                })?;
            }
            for w in b(next) {
                let pre = lift(phi_inverse(&w.prepended(0)))?;
                ensure(borders_word(even, &pre)?, &mut cases, || {
                    format!("(c) {w} in B_{next}")
                })?;
            }
        }
        k += 1;
    }
    Ok(cases)
}

fn check_intersections(max: u32) -> CheckResult {
    let mut cases = 0;
    let top = max.min(MAX_WORD_INDEX);
    for n in MIN_FAMILY_INDEX..=top {
        let own = lift(border_set_closed(n))?;
        let m_n = lift(min_forbidden(n))?;
        for m in n..=top {
            let actual = lift(border_intersection(n, m))?;
            let predicted = if n == m {
                own.clone()
            } else if n % 2 == m % 2 {
                own.without(&m_n)
            } else {
                Default::default()
            };
            ensure(actual == predicted, &mut cases, || format!("B_{n} ∩ B_{m}"))?;
        }
    }
    Ok(cases)
}

fn check_polynomial_agreement(max: u32) -> CheckResult {
    let mut cases = 0;
    let top = max.min(MAX_WORD_INDEX);
    for n in MIN_FAMILY_INDEX..=top {
        for m in MIN_FAMILY_INDEX..=top {
            let direct = lift(correlation_poly(
                &lift(min_forbidden(n))?,
                &lift(min_forbidden(m))?,
            ))?;
            let shared = lift(corr_poly_via_borders::<u64>(n, m))?;
            let closed = lift(corr_poly_closed::<u64>(n, m))?;
            ensure(direct == shared, &mut cases, || {
                format!("definition != borders at ({n}, {m})")
            })?;
            ensure(shared == closed, &mut cases, || {
                format!("borders != closed at ({n}, {m})")
            })?;
        }
    }
    Ok(cases)
}

fn check_closed_form_shape(max: u32) -> CheckResult {
    let mut cases = 0;
    for n in MIN_FAMILY_INDEX..=max {
        let diag = lift(corr_poly_closed::<u64>(n, n))?;
        let lead = lift(fib_number(n))? - 1;
        ensure(
            diag.coefficient(lead) == 1 && diag.coefficient(0) == 1,
            &mut cases,
            || format!("diagonal {n} missing z^(F_n-1) or 1"),
        )?;
        ensure(diag.is_zero_one(), &mut cases, || {
            format!("diagonal {n} coefficients")
        })?;
        ensure(
            diag.num_terms() == lift(predicted_cardinality(n))?,
            &mut cases,
            || format!("diagonal {n} term count"),
        )?;
        for m in MIN_FAMILY_INDEX..=max {
            let p = lift(corr_poly_closed::<u64>(n, m))?;
            ensure(
                p == lift(corr_poly_closed::<u64>(m, n))?,
                &mut cases,
                || format!("symmetry ({n}, {m})"),
            )?;
            if n % 2 != m % 2 {
                ensure(p.is_zero(), &mut cases, || format!("parity ({n}, {m})"))?;
            } else if n < m {
                ensure(p == diag.without_term(lead), &mut cases, || {
                    format!("cross ({n}, {m})")
                })?;
            }
        }
    }
    Ok(cases)
}

fn check_avoidance(max: u32) -> CheckResult {
    let mut cases = 0;
    let parse =
        |ws: &[&str]| -> Vec<Word> { ws.iter().map(|s| s.parse().expect("literal")).collect() };
    let mut corpus = vec![parse(&["11"]), parse(&["11", "000"])];
    for k in MIN_FAMILY_INDEX..=8 {
        corpus.push(lift(min_forbidden_family(k))?);
    }
    for patterns in &corpus {
        let dp = lift(count_avoiding::<u64>(patterns, 16))?;
        let brute = lift(count_avoiding_bruteforce::<u64>(patterns, 16))?;
        ensure(dp == brute, &mut cases, || {
            format!("automaton != enumeration for {patterns:?}")
        })?;
    }
    // All minimal forbidden words up to length 20 live in M_3..M_8 (F_8 = 21).
    let full = lift(min_forbidden_family(8))?;
    let len = (max as usize).clamp(1, 20);
    let brute = lift(count_avoiding_bruteforce::<u64>(&full, len))?;
    let dp = lift(count_avoiding::<u64>(&full, len))?;
    for n in 0..=len {
        ensure(brute.counts()[n] == n as u64 + 1, &mut cases, || {
            format!("complexity at {n}")
        })?;
        ensure(dp.counts()[n] == n as u64 + 1, &mut cases, || {
            format!("automaton complexity at {n}")
        })?;
    }
    Ok(cases)
}

/// Runs all checks with family indices up to `max_index` (3..=30).
pub fn run_all(max_index: u32, seed: u64) -> Result<Vec<CheckOutcome>> {
    if !(MIN_FAMILY_INDEX..=MAX_WORD_INDEX).contains(&max_index) {
        return Err(Error::IndexOutOfRange {
            index: max_index,
            min: MIN_FAMILY_INDEX,
            max: MAX_WORD_INDEX,
            what: "verification",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = max_index;
    let results: Vec<(&'static str, CheckResult)> = vec![
        ("fibonacci-words", check_fibonacci_words(n)),
        ("prefix-morphism", check_prefix_morphism(n)),
        ("prefix-splittings", check_prefix_splittings(n)),
        ("forbidden-morphism", check_forbidden_morphism(n)),
        ("family-palindromes", check_family_palindromes(n)),
        ("minimality-spot-check", check_minimality(n)),
        ("phi-roundtrip", check_phi_roundtrip(&mut rng, 1000)),
        ("overlap-lemmas", check_overlap_lemmas(n)),
        (
            "palindrome-transpose",
            check_palindrome_transpose(n, &mut rng, 500),
        ),
        ("autocorrelation-borders", check_autocorrelation(n)),
        ("border-agreement", check_border_agreement(n)),
        ("border-transport", check_border_transport(n)),
        ("border-intersections", check_intersections(n)),
        ("polynomial-agreement", check_polynomial_agreement(n)),
        ("closed-form-shape", check_closed_form_shape(n)),
        ("avoidance-counts", check_avoidance(n)),
    ];
    Ok(results
        .into_iter()
        .map(|(name, r)| match r {
            Ok(cases) => CheckOutcome {
                name,
                cases,
                failure: None,
            },
            Err(msg) => CheckOutcome {
                name,
                cases: 0,
                failure: Some(msg),
            },
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::reverse;

    #[test]
    fn random_palindromes_are_palindromes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let p = random_palindrome(&mut rng, 9);
            assert!(is_palindrome(&p));
            assert!((1..=9).contains(&p.len()));
            assert_eq!(reverse(&p), p);
        }
    }

    #[test]
    fn suite_passes_at_small_index() {
        let outcomes = run_all(8, DEFAULT_SEED).unwrap();
        for o in &outcomes {
            assert!(o.passed(), "{}: {:?}", o.name, o.failure);
            assert!(o.cases > 0, "{} ran no cases", o.name);
        }
    }

    #[test]
    fn suite_rejects_bad_index() {
        assert!(run_all(2, DEFAULT_SEED).is_err());
        assert!(run_all(31, DEFAULT_SEED).is_err());
    }
}
