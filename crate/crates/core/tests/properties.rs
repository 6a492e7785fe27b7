use proptest::prelude::*;

use fibword::avoid::{build_automaton, count_avoiding, count_avoiding_bruteforce};
use fibword::correlation::{correlation, correlation_poly};
use fibword::family::{phi, phi_inverse};
use fibword::word::{borders, borders_bruteforce, is_factor, is_palindrome, reverse};
use fibword::Word;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..=1, 0..=max_len).prop_map(|s| Word::from_symbols(s).unwrap())
}

fn nonempty_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..=1, 1..=max_len).prop_map(|s| Word::from_symbols(s).unwrap())
}

fn palindrome(max_len: usize) -> impl Strategy<Value = Word> {
    (
        prop::collection::vec(0u8..=1, 1..=max_len.div_ceil(2)),
        any::<bool>(),
    )
        .prop_map(|(half, odd)| {
            let mut s = half.clone();
            s.extend(half.iter().rev().skip(usize::from(odd)));
            Word::from_symbols(s).unwrap()
        })
}

/// Factor test by comparing every window.
fn naive_factor(u: &Word, w: &Word) -> bool {
    u.len() <= w.len() && (0..=w.len() - u.len()).any(|i| w.slice(i, i + u.len()) == *u)
}

proptest! {
    #[test]
    fn reverse_is_an_involution(w in word(40)) {
        prop_assert_eq!(reverse(&reverse(&w)), w);
    }

    #[test]
    fn border_members_are_prefix_and_suffix(w in nonempty_word(40)) {
        let b = borders_bruteforce(&w).unwrap();
        prop_assert!(!b.is_empty());
        prop_assert!(b.contains(&w));
        for m in &b {
            prop_assert!(w.starts_with(m) && w.ends_with(m));
        }
        let lengths = b.lengths();
        prop_assert!(lengths.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn reversed_borders_border_the_reverse(w in nonempty_word(40)) {
        let b = borders_bruteforce(&w).unwrap();
        let rb = borders_bruteforce(&reverse(&w)).unwrap();
        for m in &b {
            prop_assert!(rb.contains(&reverse(m)));
        }
        if is_palindrome(&w) {
            for m in &b {
                prop_assert!(b.contains(&reverse(m)));
            }
        }
    }

    #[test]
    fn failure_function_borders_match_oracle(w in nonempty_word(60)) {
        prop_assert_eq!(borders(&w).unwrap(), borders_bruteforce(&w).unwrap());
    }

    #[test]
    fn factor_search_matches_window_scan(u in word(6), w in word(30)) {
        prop_assert_eq!(is_factor(&u, &w), naive_factor(&u, &w));
    }

    #[test]
    fn phi_roundtrip_and_length(w in word(64)) {
        let image = phi(&w);
        prop_assert_eq!(image.len(), 2 * w.count(0) + w.count(1));
        let back = phi_inverse(&image).unwrap();
        prop_assert_eq!(phi(&back), image);
        prop_assert_eq!(back, w);
    }

    #[test]
    fn phi_inverse_only_accepts_images(w in word(20)) {
        match phi_inverse(&w) {
            Ok(v) => prop_assert_eq!(phi(&v), w),
            // An image never starts with 1 nor contains 11.
            Err(_) => prop_assert!(w.first() == Some(1) || naive_factor(&"11".parse().unwrap(), &w)),
        }
    }

    #[test]
    fn short_over_long_is_suffix_prefix_overlap(u in nonempty_word(12), v in nonempty_word(16)) {
        prop_assume!(u.len() <= v.len());
        let c = correlation(&u, &v).unwrap();
        let n = u.len();
        for k in 0..n {
            let overlap = u.suffix(n - k) == v.prefix(n - k);
            prop_assert_eq!(c.get(k) == Some(1), overlap);
        }
    }

    #[test]
    fn long_over_short_without_containment(u in nonempty_word(16), v in nonempty_word(8)) {
        prop_assume!(u.len() > v.len() && !is_factor(&v, &u));
        let c = correlation(&u, &v).unwrap();
        let (n, m) = (u.len(), v.len());
        for k in 0..n {
            let expect = k > n - m && u.suffix(n - k) == v.prefix(n - k);
            prop_assert_eq!(c.get(k) == Some(1), expect);
        }
    }

    #[test]
    fn autocorrelation_encodes_border_lengths(w in nonempty_word(30)) {
        let c = correlation(&w, &w).unwrap();
        prop_assert_eq!(c.get(0), Some(1));
        let lengths = borders_bruteforce(&w).unwrap().lengths();
        for k in 0..w.len() {
            prop_assert_eq!(c.get(k) == Some(1), lengths.contains(&(w.len() - k)));
        }
        let p = correlation_poly(&w, &w).unwrap();
        let mut exps: Vec<u64> = lengths.iter().map(|&l| l as u64 - 1).collect();
        exps.reverse();
        prop_assert_eq!(p.exponents(), exps);
    }

    #[test]
    fn palindromes_correlate_by_transpose(u in palindrome(64), v in palindrome(64)) {
        let (short, long) = if u.len() <= v.len() { (&u, &v) } else { (&v, &u) };
        let forward = correlation(short, long).unwrap();
        let backward = correlation(long, short).unwrap();
        prop_assert_eq!(forward, backward.slice(long.len() - short.len(), long.len()));
    }

    #[test]
    fn automaton_counts_match_enumeration(
        patterns in prop::collection::vec(nonempty_word(5), 1..4),
    ) {
        let dp = count_avoiding::<u64>(&patterns, 12).unwrap();
        let brute = count_avoiding_bruteforce::<u64>(&patterns, 12).unwrap();
        prop_assert_eq!(dp.counts(), brute.counts());
        for (n, c) in dp.counts().iter().enumerate() {
            prop_assert!(*c <= 1u64 << n);
        }
    }

    #[test]
    fn automaton_detects_containment(
        patterns in prop::collection::vec(nonempty_word(4), 1..4),
        w in word(16),
    ) {
        let a = build_automaton(&patterns).unwrap();
        let contains = patterns.iter().any(|p| naive_factor(p, &w));
        prop_assert_eq!(a.avoids(&w), !contains);
    }
}
