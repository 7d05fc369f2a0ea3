//! Alphabets and words of the free monoid.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

/// Index of a letter in its [`Alphabet`]. Index 0 has the highest precedence.
pub type Letter = u16;

/// A finite list of distinct generator names, listed from highest to lowest
/// precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("no generators".into()));
        }
        if names.len() > Letter::MAX as usize {
            return Err(Error::InvalidAlphabet("too many generators".into()));
        }
        let mut index = HashMap::new();
        let mut owned = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref().trim();
            let valid = !name.is_empty()
                && name.chars().all(|c| c.is_alphanumeric() || c == '_')
                && !name.chars().next().unwrap().is_ascii_digit();
            if !valid {
                return Err(Error::InvalidAlphabet(format!("bad generator name `{name}`")));
            }
            if index.insert(name.to_string(), i as Letter).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate generator `{name}`")));
            }
            owned.push(name.to_string());
        }
        Ok(Alphabet { names: owned, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter as usize]
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.names.len() as Letter
    }

    fn single_char_names(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Parses `1`, a `*`-separated product of names, or (when every name is a
    /// single character) a plain concatenation like `xxyx`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(Word::empty());
        }
        if text.contains('*') || !self.single_char_names() {
            text.split('*').map(|t| self.letter(t.trim())).collect::<Result<Vec<_>>>().map(Word)
        } else {
            text.chars()
                .map(|c| self.letter(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }

    /// Renders a word as `1` or as concatenated names (joined by `*` when some
    /// name is longer than one character).
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let sep = if self.single_char_names() { "" } else { "*" };
        word.0.iter().map(|&l| self.name(l)).collect::<Vec<_>>().join(sep)
    }

    /// Renders a word with `*` between letters, the polynomial-grammar form.
    pub fn format_word_starred(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.0.iter().map(|&l| self.name(l)).collect::<Vec<_>>().join("*")
    }

    /// Every word of length at most `max_len`, shortest first, then in
    /// alphabet order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut all = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let next: Vec<Word> = layer
                .iter()
                .flat_map(|w| self.letters().map(move |l| w.appended(l)))
                .collect();
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }
}

/// An element of the free monoid: a sequence of letter indices. The empty
/// word is the identity `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<Letter>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`
    pub fn wrap(&self, left: &Word, right: &Word) -> Word {
        let mut v = Vec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn appended(&self, l: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(l);
        Word(v)
    }

    pub fn slice(&self, range: Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0..len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.slice(start..self.len())
    }

    /// Leftmost start index `i` with `self = a·u·b` and `|a| = i`.
    pub fn find_subword(&self, u: &Word) -> Option<usize> {
        self.find_subword_from(u, 0)
    }

    pub fn find_subword_from(&self, u: &Word, from: usize) -> Option<usize> {
        if u.is_empty() {
            return (from <= self.len()).then_some(from);
        }
        if u.len() > self.len() {
            return None;
        }
        (from..=self.len() - u.len()).find(|&i| self.0[i..i + u.len()] == u.0[..])
    }

    /// All start positions of `u` in `self`, including overlapping ones.
    pub fn occurrences<'a>(&'a self, u: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let last = (self.len() + 1).saturating_sub(u.len().max(1));
        (0..last).filter(move |&i| !u.is_empty() && self.0[i..i + u.len()] == u.0[..])
    }

    pub fn contains_subword(&self, u: &Word) -> bool {
        self.find_subword(u).is_some()
    }

    pub fn is_subword_of(&self, w: &Word) -> bool {
        w.contains_subword(self)
    }

    pub fn starts_with(&self, u: &Word) -> bool {
        self.0.starts_with(&u.0)
    }

    pub fn ends_with(&self, u: &Word) -> bool {
        self.0.ends_with(&u.0)
    }
}

impl fmt::Display for Word {
    /// Debug-ish rendering with letter indices; use [`Alphabet::format_word`]
    /// for names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("g{l}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}
