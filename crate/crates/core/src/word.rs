//! Binary words and the brute-force oracles the rest of the crate is checked against.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over the alphabet `{0, 1}`.
///
/// Symbols are stored as bytes holding the values `0` or `1`. The textual form
/// is a string of ASCII `'0'`/`'1'` characters; the empty word prints as the
/// empty string.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw symbol values, rejecting anything other than 0 or 1.
    pub fn from_symbols(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidSymbol(char::from(b'0'.wrapping_add(bad))));
        }
        Ok(Word(symbols))
    }

    /// A word of `len` copies of `symbol`.
    pub fn repeat(symbol: u8, len: usize) -> Self {
        assert!(symbol <= 1, "symbol must be 0 or 1");
        Word(vec![symbol; len])
    }

    pub fn symbol(symbol: u8) -> Self {
        Word::repeat(symbol, 1)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Option<u8> {
        self.0.get(i).copied()
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn count(&self, symbol: u8) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.len() - len..].to_vec())
    }

    /// The block `self[start..end]`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.0.ends_with(&other.0)
    }

    pub fn push(&mut self, symbol: u8) {
        assert!(symbol <= 1, "symbol must be 0 or 1");
        self.0.push(symbol);
    }

    /// `self · other`
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// `symbol · self`
    pub fn prepended(&self, symbol: u8) -> Word {
        Word::symbol(symbol).concat(self)
    }

    /// `self · symbol`
    pub fn appended(&self, symbol: u8) -> Word {
        let mut out = self.clone();
        out.push(symbol);
        out
    }

    /// Left quotient `symbol⁻¹ · self`. Fails if the word does not start with `symbol`.
    pub fn strip_first(&self, symbol: u8) -> Result<Word> {
        match self.0.split_first() {
            Some((&s, rest)) if s == symbol => Ok(Word(rest.to_vec())),
            _ => Err(Error::QuotientMismatch {
                expected: symbol,
                side: "left",
            }),
        }
    }

    /// Right quotient `self · symbol⁻¹`. Fails if the word does not end with `symbol`.
    pub fn strip_last(&self, symbol: u8) -> Result<Word> {
        match self.0.split_last() {
            Some((&s, rest)) if s == symbol => Ok(Word(rest.to_vec())),
            _ => Err(Error::QuotientMismatch {
                expected: symbol,
                side: "right",
            }),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().copied()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| char::from(b'0' + b)).collect();
        f.pad(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl From<Word> for Vec<u8> {
    fn from(w: Word) -> Self {
        w.0
    }
}

pub fn reverse(w: &Word) -> Word {
    Word(w.0.iter().rev().copied().collect())
}

pub fn is_palindrome(w: &Word) -> bool {
    let n = w.len();
    (0..n / 2).all(|i| w.0[i] == w.0[n - 1 - i])
}

/// Knuth-Morris-Pratt failure function: `pi[i]` is the length of the longest
/// proper border of `w[..=i]`.
pub fn failure_function(w: &[u8]) -> Vec<usize> {
    let mut pi = vec![0; w.len()];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = pi[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// Whether `u` occurs as a contiguous block of `w`. The empty word is a factor
/// of every word.
pub fn is_factor(u: &Word, w: &Word) -> bool {
    if u.is_empty() {
        return true;
    }
    if u.len() > w.len() {
        return false;
    }
    let pattern = &u.0;
    let pi = failure_function(pattern);
    let mut k = 0;
    for &c in &w.0 {
        while k > 0 && c != pattern[k] {
            k = pi[k - 1];
        }
        if c == pattern[k] {
            k += 1;
            if k == pattern.len() {
                return true;
            }
        }
    }
    false
}

/// Nonempty borders of a nonempty word, ordered by increasing length.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BorderSet {
    members: Vec<Word>,
}

impl BorderSet {
    /// Collects words into canonical order. Duplicates are dropped.
    pub fn from_words(words: impl IntoIterator<Item = Word>) -> Self {
        let mut members: Vec<Word> = words.into_iter().collect();
        members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        members.dedup();
        BorderSet { members }
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.iter().any(|m| m == w)
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.members.iter().map(Word::len).collect()
    }

    /// The longest member, which for a border set is the bordered word itself.
    pub fn longest(&self) -> Option<&Word> {
        self.members.last()
    }

    pub fn intersection(&self, other: &BorderSet) -> BorderSet {
        BorderSet::from_words(self.members.iter().filter(|m| other.contains(m)).cloned())
    }

    pub fn without(&self, w: &Word) -> BorderSet {
        BorderSet::from_words(self.members.iter().filter(|m| *m != w).cloned())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a BorderSet {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Display for BorderSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BorderSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

/// All nonempty words that are both a prefix and a suffix of `w`, found by
/// comparing every candidate length directly. Quadratic; this is the oracle.
pub fn borders_bruteforce(w: &Word) -> Result<BorderSet> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let members = (1..=n)
        .filter(|&len| w.0[..len] == w.0[n - len..])
        .map(|len| w.prefix(len));
    Ok(BorderSet::from_words(members))
}

/// Same contract as [`borders_bruteforce`], following the failure-function chain.
pub fn borders(w: &Word) -> Result<BorderSet> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let pi = failure_function(&w.0);
    let mut lengths = vec![w.len()];
    let mut k = pi[w.len() - 1];
    while k > 0 {
        lengths.push(k);
        k = pi[k - 1];
    }
    Ok(BorderSet::from_words(
        lengths.into_iter().map(|len| w.prefix(len)),
    ))
}
