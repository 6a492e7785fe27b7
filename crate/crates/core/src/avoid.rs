//! Counting binary words that avoid a finite set of forbidden factors.
//!
//! [`PatternAutomaton`] tracks the longest suffix of the input that is still a
//! proper prefix of some pattern; reading a full pattern sends it to a single
//! absorbing dead state. Counting is a population dynamic program over the
//! live states.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::family::min_forbidden;
use crate::poly::Coefficient;
use crate::word::{is_factor, Word};

/// Largest `max_len` accepted by [`count_avoiding_bruteforce`].
pub const BRUTEFORCE_BUDGET: usize = 24;

#[derive(Clone, Debug)]
pub struct PatternAutomaton {
    /// `transitions[state][symbol]`, total over `{0, 1}`.
    transitions: Vec<[usize; 2]>,
    /// Suffix tracked by each live state; `None` for the dead state.
    labels: Vec<Option<Word>>,
    dead: usize,
}

impl PatternAutomaton {
    pub const START: usize = 0;

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    pub fn num_live_states(&self) -> usize {
        self.num_states() - 1
    }

    pub fn dead_state(&self) -> usize {
        self.dead
    }

    pub fn is_dead(&self, state: usize) -> bool {
        state == self.dead
    }

    pub fn step(&self, state: usize, symbol: u8) -> usize {
        self.transitions[state][symbol as usize]
    }

    pub fn run(&self, w: &Word) -> usize {
        w.iter().fold(Self::START, |s, c| self.step(s, c))
    }

    /// Whether `w` contains none of the patterns.
    pub fn avoids(&self, w: &Word) -> bool {
        !self.is_dead(self.run(w))
    }

    /// The suffix remembered by a live state.
    pub fn label(&self, state: usize) -> Option<&Word> {
        self.labels[state].as_ref()
    }

    /// Labels of all live states, in state order.
    pub fn live_labels(&self) -> Vec<&Word> {
        self.labels.iter().flatten().collect()
    }
}

/// Builds the factor-tracking automaton for a nonempty set of nonempty patterns.
pub fn build_automaton<'a>(
    patterns: impl IntoIterator<Item = &'a Word>,
) -> Result<PatternAutomaton> {
    // Trie over all pattern prefixes.
    let mut children: Vec<[Option<usize>; 2]> = vec![[None, None]];
    let mut terminal = vec![false];
    let mut depth_label = vec![Word::empty()];
    for p in patterns {
        if p.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let mut node = 0;
        for c in p.iter() {
            node = match children[node][c as usize] {
                Some(next) => next,
                None => {
                    let id = children.len();
                    children.push([None, None]);
                    terminal.push(false);
                    depth_label.push(depth_label[node].appended(c));
                    children[node][c as usize] = Some(id);
                    id
                }
            };
        }
        terminal[node] = true;
    }

    // Breadth-first failure links and completed transitions.
    let trie_size = children.len();
    let mut goto = vec![[0usize; 2]; trie_size];
    let mut fail = vec![0usize; trie_size];
    let mut queue = VecDeque::new();
    for c in 0..2 {
        match children[0][c] {
            Some(child) => {
                goto[0][c] = child;
                queue.push_back(child);
            }
            None => goto[0][c] = 0,
        }
    }
    while let Some(node) = queue.pop_front() {
        terminal[node] |= terminal[fail[node]];
        for c in 0..2 {
            match children[node][c] {
                Some(child) => {
                    fail[child] = goto[fail[node]][c];
                    goto[node][c] = child;
                    queue.push_back(child);
                }
                None => goto[node][c] = goto[fail[node]][c],
            }
        }
    }

    // Collapse terminal nodes into one sink and keep live states reachable from the root.
    let mut renumber: HashMap<usize, usize> = HashMap::new();
    let mut order = vec![];
    if !terminal[0] {
        renumber.insert(0, 0);
        order.push(0);
    }
    let mut i = 0;
    while i < order.len() {
        let node = order[i];
        for &next in &goto[node] {
            if !terminal[next] && !renumber.contains_key(&next) {
                renumber.insert(next, order.len());
                order.push(next);
            }
        }
        i += 1;
    }
    let dead = order.len();
    let mut transitions: Vec<[usize; 2]> = order
        .iter()
        .map(|&node| {
            let map = |next: usize| {
                if terminal[next] {
                    dead
                } else {
                    renumber[&next]
                }
            };
            [map(goto[node][0]), map(goto[node][1])]
        })
        .collect();
    transitions.push([dead, dead]);
    let mut labels: Vec<Option<Word>> = order
        .iter()
        .map(|&node| Some(depth_label[node].clone()))
        .collect();
    labels.push(None);

    Ok(PatternAutomaton {
        transitions,
        labels,
        dead,
    })
}

/// `counts[n]` = number of length-`n` binary words avoiding every pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountTable<T> {
    counts: Vec<T>,
}

impl<T: Coefficient> CountTable<T> {
    pub fn counts(&self) -> &[T] {
        &self.counts
    }

    pub fn get(&self, n: usize) -> Option<&T> {
        self.counts.get(n)
    }

    pub fn max_len(&self) -> usize {
        self.counts.len() - 1
    }
}

impl<T: Coefficient> fmt::Display for CountTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(T::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Counts avoiding words of every length `0..=max_len` by propagating state
/// populations through the automaton.
pub fn count_avoiding<T: Coefficient>(patterns: &[Word], max_len: usize) -> Result<CountTable<T>> {
    let automaton = build_automaton(patterns)?;
    let live = automaton.num_live_states();
    let mut population = vec![T::zero(); live];
    if live > 0 {
        population[PatternAutomaton::START] = T::one();
    }
    let mut counts = Vec::with_capacity(max_len + 1);
    for len in 0..=max_len {
        let mut total = T::zero();
        for p in &population {
            total = total
                .checked_add(p)
                .ok_or(Error::Overflow("avoidance count"))?;
        }
        counts.push(total);
        if len == max_len {
            break;
        }
        let mut next = vec![T::zero(); live];
        for (state, p) in population.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for symbol in 0..2 {
                let target = automaton.step(state, symbol);
                if !automaton.is_dead(target) {
                    next[target] = next[target]
                        .checked_add(p)
                        .ok_or(Error::Overflow("avoidance count"))?;
                }
            }
        }
        population = next;
    }
    Ok(CountTable { counts })
}

/// Same contract as [`count_avoiding`], by testing every binary word of each
/// length directly. `max_len` is capped at [`BRUTEFORCE_BUDGET`].
pub fn count_avoiding_bruteforce<T: Coefficient>(
    patterns: &[Word],
    max_len: usize,
) -> Result<CountTable<T>> {
    if max_len > BRUTEFORCE_BUDGET {
        return Err(Error::EnumerationBudget {
            requested: max_len,
            budget: BRUTEFORCE_BUDGET,
        });
    }
    if patterns.iter().any(Word::is_empty) {
        return Err(Error::EmptyPattern);
    }
    let mut counts = Vec::with_capacity(max_len + 1);
    for len in 0..=max_len {
        let short: Vec<&Word> = patterns.iter().filter(|p| p.len() <= len).collect();
        let mut total = T::zero();
        for bits in 0u32..(1u32 << len) {
            let symbols = (0..len)
                .map(|i| ((bits >> (len - 1 - i)) & 1) as u8)
                .collect();
            let w = Word::from_symbols(symbols)?;
            if short.iter().all(|p| !is_factor(p, &w)) {
                total = total
                    .checked_add(&T::one())
                    .ok_or(Error::Overflow("avoidance count"))?;
            }
        }
        counts.push(total);
    }
    Ok(CountTable { counts })
}

/// The pattern set `{M_3, ..., M_k}`.
pub fn min_forbidden_family(k: u32) -> Result<Vec<Word>> {
    (3..=k).map(min_forbidden).collect()
}
