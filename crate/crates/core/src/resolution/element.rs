use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chains::Chain;
use crate::field::FieldElement;
use crate::order::{MonomialOrder, OrderKey};
use crate::word::{Alphabet, Word};

/// A basis element `c ⊗ s̄` of `K C_n ⊗ A`; `tail` is a normal word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorTerm {
    pub chain: Arc<Chain>,
    pub tail: Word,
}

impl TensorTerm {
    pub fn new(chain: Arc<Chain>, tail: Word) -> Self {
        TensorTerm { chain, tail }
    }

    pub fn degree(&self) -> usize {
        self.chain.degree()
    }

    /// `c·s` in the free monoid; the basis is ordered by this word.
    pub fn concat(&self) -> Word {
        self.chain.word().concat(&self.tail)
    }
}

/// Sort key of a term: the order key of `c·s`, then the term itself (the
/// second component never decides between distinct terms of one degree).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct TermKey {
    key: OrderKey,
    term: TensorTerm,
}

/// An element of the free right module `K C_n ⊗ A`, with no zero
/// coefficients. Degree-0 elements are elements of `A`, written on the
/// root chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    degree: usize,
    terms: BTreeMap<TermKey, FieldElement>,
}

impl ModuleElement {
    pub fn zero(degree: usize) -> Self {
        ModuleElement { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · term`; the term must have this element's degree.
    pub fn add_term(&mut self, order: &MonomialOrder, term: TensorTerm, coeff: FieldElement) {
        assert_eq!(term.degree(), self.degree, "term degree differs from element degree");
        if coeff.is_zero() {
            return;
        }
        let key = TermKey { key: order.key(&term.concat()), term };
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += scale · other`
    pub fn add_scaled(&mut self, scale: &FieldElement, other: &ModuleElement) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        for (k, c) in &other.terms {
            let coeff = scale * c;
            if coeff.is_zero() {
                continue;
            }
            match self.terms.entry(k.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(coeff);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &coeff;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
    }

    pub fn scaled(&self, c: &FieldElement) -> ModuleElement {
        let mut out = ModuleElement::zero(self.degree);
        out.add_scaled(c, self);
        out
    }

    /// Terms in descending basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&TensorTerm, &FieldElement)> {
        self.terms.iter().rev().map(|(k, c)| (&k.term, c))
    }

    pub fn coeff(&self, order: &MonomialOrder, term: &TensorTerm) -> Option<&FieldElement> {
        self.terms.get(&TermKey { key: order.key(&term.concat()), term: term.clone() })
    }

    /// The largest term and its coefficient.
    pub fn leading_term(&self) -> Option<(&TensorTerm, &FieldElement)> {
        self.terms.last_key_value().map(|(k, c)| (&k.term, c))
    }

    /// `[c | s]` terms in descending order, `coeff·` prefix when the
    /// coefficient is not ±1, `0` for the zero element.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (t, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format!("{mag}·"));
            }
            out.push_str(&format!(
                "[{} | {}]",
                alphabet.format_word(t.chain.word()),
                alphabet.format_word(&t.tail)
            ));
        }
        out
    }
}

/// Serializable form of a [`ModuleElement`], terms in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleElementRecord {
    pub degree: usize,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub chain: String,
    pub tail: String,
    pub coeff: String,
}
