//! Weighted degree-lexicographic monomial orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// Weighted deglex: words are compared by total weight first, then
/// lexicographically with the alphabet's precedence (letter 0 is largest).
///
/// With all weights equal to 1 this is plain deglex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    weights: Vec<u32>,
}

/// A key whose natural `Ord` agrees with [`MonomialOrder::compare`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderKey {
    weight: u64,
    lex: Vec<Letter>,
}

impl MonomialOrder {
    pub fn deglex(alphabet: &Alphabet) -> Self {
        MonomialOrder { weights: vec![1; alphabet.len()] }
    }

    /// `weights[i]` is the weight of letter `i`.
    pub fn weighted(alphabet: &Alphabet, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != alphabet.len() {
            return Err(Error::InvalidAlphabet(format!(
                "{} weights for {} generators",
                weights.len(),
                alphabet.len()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeight { letter: alphabet.name(i as Letter).to_string() });
        }
        Ok(MonomialOrder { weights })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, w: &Word) -> u64 {
        w.letters().iter().map(|&l| self.weights[l as usize] as u64).sum()
    }

    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| {
            // Equal weight and positive letter weights rule out a proper
            // prefix relation, so the first differing letter decides.
            for (x, y) in a.letters().iter().zip(b.letters()) {
                if x != y {
                    return y.cmp(x);
                }
            }
            a.len().cmp(&b.len())
        })
    }

    pub fn key(&self, w: &Word) -> OrderKey {
        OrderKey {
            weight: self.weight(w),
            lex: w.letters().iter().map(|&l| Letter::MAX - l).collect(),
        }
    }

    pub fn max<'a>(&self, words: impl IntoIterator<Item = &'a Word>) -> Option<&'a Word> {
        words.into_iter().max_by(|a, b| self.compare(a, b))
    }
}
