//! Order ideals of monomials and anti-chains in a finite word poset.
//!
//! An o.i.m. is a subset closed under taking subwords. Its complement is
//! generated by its minimal elements, which form an anti-chain, and every
//! anti-chain arises this way.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// All words up to a length bound, ordered by the subword relation.
#[derive(Debug, Clone)]
pub struct WordPoset {
    alphabet: Alphabet,
    words: BTreeSet<Word>,
}

impl WordPoset {
    pub fn new(alphabet: &Alphabet, max_len: usize) -> Self {
        WordPoset { alphabet: alphabet.clone(), words: alphabet.words_up_to(max_len).into_iter().collect() }
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    fn check_members(&self, set: &BTreeSet<Word>) -> Result<()> {
        match set.iter().find(|w| !self.contains(w)) {
            Some(w) => Err(Error::NotInPoset(self.alphabet.format_word(w))),
            None => Ok(()),
        }
    }
}

/// The two maximal proper subwords; every proper subword lies below one.
fn immediate_subwords(w: &Word) -> [Word; 2] {
    [w.prefix(w.len() - 1), w.suffix_from(1)]
}

/// Minimal elements of the complement of `oim`.
pub fn antichain_from_oim(poset: &WordPoset, oim: &BTreeSet<Word>) -> Result<BTreeSet<Word>> {
    poset.check_members(oim)?;
    for w in oim.iter().filter(|w| !w.is_empty()) {
        for sub in immediate_subwords(w) {
            if !oim.contains(&sub) {
                return Err(Error::NotAnOim {
                    word: poset.alphabet.format_word(w),
                    missing: poset.alphabet.format_word(&sub),
                });
            }
        }
    }
    Ok(poset
        .words
        .iter()
        .filter(|y| !oim.contains(*y))
        .filter(|y| y.is_empty() || immediate_subwords(y).iter().all(|s| oim.contains(s)))
        .cloned()
        .collect())
}

/// Every element `x` such that each anti-chain element comparable to `x`
/// lies strictly above it.
pub fn oim_from_antichain(poset: &WordPoset, ac: &BTreeSet<Word>) -> Result<BTreeSet<Word>> {
    poset.check_members(ac)?;
    for a in ac {
        for b in ac {
            if a != b && a.is_subword_of(b) {
                return Err(Error::NotAnAntichain {
                    smaller: poset.alphabet.format_word(a),
                    larger: poset.alphabet.format_word(b),
                });
            }
        }
    }
    Ok(poset
        .words
        .iter()
        .filter(|x| {
            ac.iter().all(|y| {
                let comparable = x.is_subword_of(y) || y.is_subword_of(x);
                !comparable || (x.is_subword_of(y) && *x != y)
            })
        })
        .cloned()
        .collect())
}
