use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::word::Word;

/// A path `1 = w₀ → w₁ → … → w_n` in the chain graph, with its word and the
/// placements of its obstructions.
///
/// Placements are 1-based and inclusive: obstruction `k` occupies letters
/// `starts[k]..=ends[k]` of the word. A chain of degree `n ≥ 2` has `n - 1`
/// of them. Equality, hashing and ordering only look at `(degree, word)`.
#[derive(Debug, Clone)]
pub struct Chain {
    word: Word,
    nodes: Vec<Word>,
    witnesses: Vec<Word>,
    starts: Vec<usize>,
    ends: Vec<usize>,
}

impl Chain {
    /// The unique chain of degree 0.
    pub fn root() -> Self {
        Chain {
            word: Word::empty(),
            nodes: vec![Word::empty()],
            witnesses: Vec::new(),
            starts: Vec::new(),
            ends: Vec::new(),
        }
    }

    /// Appends `node`. `witness` is the obstruction ending the new word;
    /// `None` only for the step out of the root.
    pub(crate) fn extended(&self, node: &Word, witness: Option<&Word>) -> Chain {
        let mut c = self.clone();
        c.word = self.word.concat(node);
        c.nodes.push(node.clone());
        if let Some(s) = witness {
            debug_assert!(c.word.ends_with(s));
            c.ends.push(c.word.len());
            c.starts.push(c.word.len() - s.len() + 1);
            c.witnesses.push(s.clone());
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Path nodes including the root.
    pub fn nodes(&self) -> &[Word] {
        &self.nodes
    }

    /// `w_n`, the empty word for the root chain.
    pub fn last_node(&self) -> &Word {
        self.nodes.last().expect("path contains the root")
    }

    /// The obstruction placed at each position, in order.
    pub fn witnesses(&self) -> &[Word] {
        &self.witnesses
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    /// `⌈c⌉^m`: the chain formed by the first `m` path nodes.
    pub fn bracket_prefix(&self, m: usize) -> Result<Chain> {
        if m > self.degree() {
            return Err(Error::OutOfRange { index: m, max: self.degree() });
        }
        let len: usize = self.nodes[..=m].iter().map(Word::len).sum();
        let placed = m.saturating_sub(1);
        Ok(Chain {
            word: self.word.prefix(len),
            nodes: self.nodes[..=m].to_vec(),
            witnesses: self.witnesses[..placed].to_vec(),
            starts: self.starts[..placed].to_vec(),
            ends: self.ends[..placed].to_vec(),
        })
    }

    /// `⌊c⌋_m`: what is left of the word after `⌈c⌉^m`.
    pub fn bracket_tail(&self, m: usize) -> Result<Word> {
        if m > self.degree() {
            return Err(Error::OutOfRange { index: m, max: self.degree() });
        }
        let len: usize = self.nodes[..=m].iter().map(Word::len).sum();
        Ok(self.word.suffix_from(len))
    }

    /// `(⌈c⌉^{n-1}, ⌊c⌋_{n-1})`.
    pub fn split(&self) -> Result<(Chain, Word)> {
        if self.degree() == 0 {
            return Err(Error::OutOfRange { index: 0, max: 0 });
        }
        let m = self.degree() - 1;
        Ok((self.bracket_prefix(m)?, self.bracket_tail(m)?))
    }
}

impl PartialEq for Chain {
    fn eq(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.word == other.word
    }
}

impl Eq for Chain {}

impl Hash for Chain {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree().hash(state);
        self.word.hash(state);
    }
}

impl PartialOrd for Chain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Chain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.word.cmp(&other.word))
    }
}

/// Splits off the last path node: an `(n-1)`-chain and a normal tail.
pub fn split_chain(c: &Chain) -> Result<(Chain, Word)> {
    c.split()
}

pub fn bracket_prefix(c: &Chain, m: usize) -> Result<Chain> {
    c.bracket_prefix(m)
}

pub fn bracket_tail(c: &Chain, m: usize) -> Result<Word> {
    c.bracket_tail(m)
}
