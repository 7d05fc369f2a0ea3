//! Enumeration and counting of normal words.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::RewriteSystem;
use crate::word::{Letter, Word};

/// Every word of length at most `max_length` that contains no rule leading
/// monomial, sorted ascending by the monomial order.
pub fn normal_words(rs: &RewriteSystem, max_length: usize) -> Vec<Word> {
    let lms: Vec<&Word> = rs.leading_monomials().collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_length {
        let mut next = Vec::new();
        for w in &layer {
            for l in rs.alphabet().letters() {
                let nw = w.appended(l);
                // w is normal, so a new occurrence has to end at the last letter
                if lms.iter().all(|m| !nw.ends_with(m)) {
                    next.push(nw);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort_by(|a, b| rs.order().compare(a, b));
    out
}

/// Number of normal words of each length `0..=max_length`, computed with the
/// transfer matrix of [`NormalWordAutomaton`].
pub fn count_normal_words(rs: &RewriteSystem, max_length: usize) -> Vec<BigUint> {
    let lms: Vec<Word> = rs.leading_monomials().cloned().collect();
    NormalWordAutomaton::new(&lms, rs.alphabet().len()).count_by_length(max_length)
}

/// Deterministic automaton accepting exactly the words that avoid every
/// pattern as a subword (Aho–Corasick with the matching states removed).
#[derive(Debug, Clone)]
pub struct NormalWordAutomaton {
    /// `transitions[state][letter]`, `None` when the letter completes a pattern.
    transitions: Vec<Vec<Option<usize>>>,
}

impl NormalWordAutomaton {
    pub fn new(patterns: &[Word], alphabet_size: usize) -> Self {
        // trie
        let mut goto: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet_size]];
        let mut terminal = vec![false];
        for p in patterns {
            let mut s = 0;
            for &l in p.letters() {
                s = match goto[s][l as usize] {
                    Some(t) => t,
                    None => {
                        goto.push(vec![None; alphabet_size]);
                        terminal.push(false);
                        let t = goto.len() - 1;
                        goto[s][l as usize] = Some(t);
                        t
                    }
                };
            }
            terminal[s] = true;
        }

        // failure links in BFS order, completing the transition function
        let n = goto.len();
        let mut delta = vec![vec![0usize; alphabet_size]; n];
        let mut fail = vec![0usize; n];
        let mut queue = VecDeque::new();
        for a in 0..alphabet_size {
            match goto[0][a] {
                Some(t) => {
                    delta[0][a] = t;
                    queue.push_back(t);
                }
                None => delta[0][a] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            terminal[s] = terminal[s] || terminal[fail[s]];
            for a in 0..alphabet_size {
                match goto[s][a] {
                    Some(t) => {
                        fail[t] = delta[fail[s]][a];
                        delta[s][a] = t;
                        queue.push_back(t);
                    }
                    None => delta[s][a] = delta[fail[s]][a],
                }
            }
        }

        // drop dead states and renumber
        let mut index = vec![None; n];
        let mut next = 0;
        for s in 0..n {
            if !terminal[s] {
                index[s] = Some(next);
                next += 1;
            }
        }
        let transitions = (0..n)
            .filter(|&s| !terminal[s])
            .map(|s| delta[s].iter().map(|&t| index[t]).collect())
            .collect();
        NormalWordAutomaton { transitions }
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    /// False also when the empty word is itself forbidden (no live states).
    pub fn accepts(&self, w: &Word) -> bool {
        if self.transitions.is_empty() {
            return false;
        }
        let mut s = 0;
        for &l in w.letters() {
            match self.transitions[s][l as usize] {
                Some(t) => s = t,
                None => return false,
            }
        }
        true
    }

    pub fn step(&self, state: usize, letter: Letter) -> Option<usize> {
        self.transitions[state][letter as usize]
    }

    pub fn count_by_length(&self, max_length: usize) -> Vec<BigUint> {
        if self.transitions.is_empty() {
            return vec![BigUint::zero(); max_length + 1];
        }
        let mut counts = vec![BigUint::zero(); self.transitions.len()];
        counts[0] = BigUint::one();
        let mut out = Vec::with_capacity(max_length + 1);
        for len in 0..=max_length {
            out.push(counts.iter().sum());
            if len == max_length {
                break;
            }
            let mut next = vec![BigUint::zero(); counts.len()];
            for (s, c) in counts.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for t in self.transitions[s].iter().flatten() {
                    next[*t] += c;
                }
            }
            counts = next;
        }
        out
    }
}
