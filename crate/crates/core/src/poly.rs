//! Noncommutative polynomials over an exact field.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::order::MonomialOrder;
use crate::word::{Alphabet, Word};

/// A finite `K`-linear combination of words. Zero coefficients are never
/// stored, so the empty map is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, FieldElement>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn monomial(word: Word, coeff: FieldElement) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn constant(c: FieldElement) -> Self {
        Polynomial::monomial(Word::empty(), c)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldElement)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, FieldElement)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> Option<&FieldElement> {
        self.terms.get(w)
    }

    /// Adds `coeff · word`, dropping the entry if it cancels.
    pub fn add_term(&mut self, word: Word, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    /// `self += scale · left · other · right`
    pub fn add_scaled_wrapped(
        &mut self,
        scale: &FieldElement,
        left: &Word,
        other: &Polynomial,
        right: &Word,
    ) {
        for (w, c) in &other.terms {
            self.add_term(w.wrap(left, right), scale * c);
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// `left · self · right`
    pub fn wrap(&self, left: &Word, right: &Word) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(w, c)| (w.wrap(left, right), c.clone())).collect() }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(&Word, &FieldElement)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn lm(&self, order: &MonomialOrder) -> Result<&Word> {
        self.leading_term(order).map(|t| t.0)
    }

    pub fn lc(&self, order: &MonomialOrder) -> Result<&FieldElement> {
        self.leading_term(order).map(|t| t.1)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Polynomial> {
        let lc = self.lc(order)?.inv();
        Ok(self.scale(&lc))
    }

    /// Terms sorted descending by the monomial order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Word, &FieldElement)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    /// Largest total weight among support words; 0 for the zero polynomial.
    pub fn degree(&self, order: &MonomialOrder) -> u64 {
        self.terms.keys().map(|w| order.weight(w)).max().unwrap_or(0)
    }

    /// Parses the text grammar: `+`/`-` separated terms, each an optional
    /// integer or fraction coefficient followed by `*`-separated letter names;
    /// `1` is the empty word.
    pub fn parse(text: &str, alphabet: &Alphabet, field: &Field) -> Result<Polynomial> {
        let err = |reason: &str| Error::Parse { input: text.to_string(), reason: reason.to_string() };
        let mut p = Polynomial::zero();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut leading_sign = false;
        for ch in text.chars() {
            match ch {
                '+' | '-' => {
                    if current.trim().is_empty() {
                        if chunks.is_empty() && !leading_sign {
                            leading_sign = true;
                            negative = ch == '-';
                            current.clear();
                            continue;
                        }
                        return Err(err("dangling operator"));
                    }
                    chunks.push((negative, std::mem::take(&mut current)));
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.trim().is_empty() {
            return Err(err("empty term"));
        }
        chunks.push((negative, current));

        for (negative, chunk) in chunks {
            let factors: Vec<&str> = chunk.split('*').map(str::trim).collect();
            if factors.iter().any(|f| f.is_empty()) {
                return Err(err("empty factor"));
            }
            let mut coeff = field.one();
            let mut letters = Vec::new();
            for (i, f) in factors.iter().enumerate() {
                let numeric = f.chars().next().is_some_and(|c| c.is_ascii_digit());
                if numeric {
                    if i != 0 && *f != "1" {
                        return Err(err("coefficient must come first"));
                    }
                    coeff = &coeff * &field.parse(f)?;
                } else {
                    let w = match alphabet.letter(f) {
                        Ok(l) => Word::letter(l),
                        Err(_) => alphabet.parse_word(f)?,
                    };
                    letters.extend_from_slice(w.letters());
                }
            }
            if negative {
                coeff = -&coeff;
            }
            p.add_term(Word::from_letters(letters), coeff);
        }
        Ok(p)
    }

    /// Canonical text form, terms descending by `order`.
    pub fn format(&self, alphabet: &Alphabet, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            match (w.is_empty(), mag.is_one()) {
                (true, _) => out.push_str(&mag.to_string()),
                (false, true) => out.push_str(&alphabet.format_word_starred(w)),
                (false, false) => {
                    out.push_str(&format!("{mag}*{}", alphabet.format_word_starred(w)))
                }
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl FromIterator<(Word, FieldElement)> for Polynomial {
    fn from_iter<I: IntoIterator<Item = (Word, FieldElement)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}
