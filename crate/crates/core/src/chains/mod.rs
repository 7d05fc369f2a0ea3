//! Obstructions, Anick chains and the graph that generates them.
//!
//! Degrees use homological numbering throughout: `C₀ = {1}`, `C₁` is the
//! alphabet and `C₂` the obstructions. Only [`is_prechain`] and
//! [`is_chain_top_down`] count obstructions instead (`n = degree - 1`).

mod chain;
mod graph;
mod oim;
mod top_down;

pub use chain::{bracket_prefix, bracket_tail, split_chain, Chain};
pub use graph::{build_chain_graph, enumerate_chains, ChainGraph, Edge};
pub use oim::{antichain_from_oim, oim_from_antichain, WordPoset};
pub use top_down::{
    chain_placements, is_chain_top_down, is_prechain, prechain_placements, prechain_words,
    Placement,
};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groebner::RewriteSystem;
use crate::word::{Alphabet, Word};

/// An anti-chain of words of length at least 2 under the subword order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObstructionSet {
    words: BTreeSet<Word>,
}

impl ObstructionSet {
    pub fn new(words: impl IntoIterator<Item = Word>, alphabet: &Alphabet) -> Result<Self> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        for w in &words {
            if w.len() < 2 {
                return Err(Error::ShortObstruction(alphabet.format_word(w)));
            }
            for v in &words {
                if v != w && w.is_subword_of(v) {
                    return Err(Error::NotAnAntichain {
                        smaller: alphabet.format_word(w),
                        larger: alphabet.format_word(v),
                    });
                }
            }
        }
        Ok(ObstructionSet { words })
    }

    pub fn empty() -> Self {
        ObstructionSet { words: BTreeSet::new() }
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// `(start, end)` of every obstruction occurrence in `w`, 0-based with
    /// `end` exclusive, sorted by start then end.
    pub fn occurrences_in(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .words
            .iter()
            .flat_map(|o| w.occurrences(o).map(move |i| (i, i + o.len())))
            .collect();
        out.sort_unstable();
        out
    }

    /// True when `w` contains no obstruction.
    pub fn is_normal(&self, w: &Word) -> bool {
        self.words.iter().all(|o| !w.contains_subword(o))
    }
}

/// The leading monomials of a minimal rewrite system.
pub fn obstructions(rs: &RewriteSystem) -> Result<ObstructionSet> {
    rs.require_minimal()?;
    ObstructionSet::new(rs.leading_monomials().cloned(), rs.alphabet())
}
