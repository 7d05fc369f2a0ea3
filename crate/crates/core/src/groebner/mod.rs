//! Rewriting with relations: normal forms, overlap checking and bounded
//! completion of noncommutative Gröbner bases.

mod normal_words;
mod oracle;

pub use normal_words::{count_normal_words, normal_words, NormalWordAutomaton};
pub use oracle::leading_monomials_oracle;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::order::{MonomialOrder, OrderKey};
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use crate::word::{Alphabet, Word};

/// A monic rewriting rule `lm → lm - poly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    lm: Word,
    poly: Polynomial,
}

impl Rule {
    pub fn lm(&self) -> &Word {
        &self.lm
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }
}

/// Monic rules sorted by leading monomial, largest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    order: MonomialOrder,
    field: Field,
    rules: Vec<Rule>,
    minimal: bool,
    reduced: bool,
    verified_to_degree: Option<u64>,
}

/// One application of a rule inside a word: `coeff · left · rule · right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub coeff: FieldElement,
    pub left: Word,
    pub rule: usize,
    pub right: Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverlapKind {
    /// A proper suffix of the left LM is a proper prefix of the right LM.
    Overlap,
    /// The right LM occurs inside the left LM.
    Inclusion,
}

/// An ambiguity between two rules. `offset` is where the right rule's LM
/// starts inside `word`; the left rule's LM always starts at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub left: usize,
    pub right: usize,
    pub word: Word,
    pub offset: usize,
    pub kind: OverlapKind,
}

/// An unresolved ambiguity: the two one-step reductions of `overlap.word`
/// have different normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub overlap: Overlap,
    pub left_normal_form: Polynomial,
    pub right_normal_form: Polynomial,
    /// `left_normal_form - right_normal_form`, nonzero and normal.
    pub residue: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroebnerCheck {
    Verified { degree: u64 },
    Failed(Box<Counterexample>),
}

impl GroebnerCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, GroebnerCheck::Verified { .. })
    }
}

/// Fully reduces `p` by `rules`: the largest reducible support word first,
/// its leftmost rule occurrence, rules tried in slice order. Every applied
/// step is reported to `trace`.
fn reduce_with(
    p: &Polynomial,
    rules: &[Rule],
    order: &MonomialOrder,
    mut trace: Option<&mut Vec<ReductionStep>>,
) -> Polynomial {
    if rules.is_empty() {
        return p.clone();
    }
    let mut work: BTreeMap<OrderKey, (Word, FieldElement)> =
        p.terms().map(|(w, c)| (order.key(w), (w.clone(), c.clone()))).collect();
    let mut out = Polynomial::zero();
    while let Some((_, (word, coeff))) = work.pop_last() {
        let Some((pos, idx)) = find_reducer(&word, rules) else {
            out.add_term(word, coeff);
            continue;
        };
        let rule = &rules[idx];
        let left = word.prefix(pos);
        let right = word.suffix_from(pos + rule.lm.len());
        for (w, c) in rule.poly.terms() {
            if *w == rule.lm {
                continue;
            }
            let nw = w.wrap(&left, &right);
            let delta = -&(&coeff * c);
            let key = order.key(&nw);
            match work.get_mut(&key) {
                Some(slot) => {
                    let sum = &slot.1 + &delta;
                    if sum.is_zero() {
                        work.remove(&key);
                    } else {
                        slot.1 = sum;
                    }
                }
                None => {
                    work.insert(key, (nw, delta));
                }
            }
        }
        if let Some(t) = trace.as_deref_mut() {
            t.push(ReductionStep { coeff, left, rule: idx, right });
        }
    }
    out
}

/// Leftmost position where some rule's LM occurs; first rule in order wins.
fn find_reducer(word: &Word, rules: &[Rule]) -> Option<(usize, usize)> {
    let letters = word.letters();
    (0..letters.len()).find_map(|pos| {
        rules
            .iter()
            .position(|r| letters[pos..].starts_with(r.lm.letters()))
            .map(|idx| (pos, idx))
    })
}

fn make_rules(polys: Vec<Polynomial>, order: &MonomialOrder) -> Result<Vec<Rule>> {
    let mut rules = polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let poly = p.monic(order)?;
            let lm = poly.lm(order)?.clone();
            Ok(Rule { lm, poly })
        })
        .collect::<Result<Vec<_>>>()?;
    rules.sort_by(|a, b| order.compare(&b.lm, &a.lm).then_with(|| a.poly.cmp(&b.poly)));
    Ok(rules)
}

/// Interreduces until every rule is monic and fully reduced by the others.
/// The result is sorted ascending by leading monomial.
fn interreduce(polys: Vec<Polynomial>, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let mut current: Vec<Polynomial> =
        make_rules(polys, order)?.into_iter().rev().map(|r| r.poly).collect();
    loop {
        let mut kept: Vec<Rule> = Vec::with_capacity(current.len());
        for p in &current {
            let r = reduce_with(p, &kept, order, None);
            if !r.is_zero() {
                let poly = r.monic(order)?;
                let lm = poly.lm(order)?.clone();
                kept.push(Rule { lm, poly });
            }
        }
        let mut next: Vec<Polynomial> = kept.into_iter().map(|r| r.poly).collect();
        next.sort_by(|a, b| {
            order
                .compare(a.lm(order).unwrap(), b.lm(order).unwrap())
                .then_with(|| a.cmp(b))
        });
        if next == current {
            return Ok(next);
        }
        current = next;
    }
}

impl RewriteSystem {
    /// Normalizes every polynomial to be monic and sorts the rules. Flags
    /// are computed from the resulting rules; nothing is verified yet.
    pub fn new(
        alphabet: Alphabet,
        order: MonomialOrder,
        field: Field,
        polys: Vec<Polynomial>,
    ) -> Result<Self> {
        let rules = make_rules(polys, &order)?;
        let mut rs = RewriteSystem {
            alphabet,
            order,
            field,
            rules,
            minimal: false,
            reduced: false,
            verified_to_degree: None,
        };
        rs.minimal = rs.compute_minimal().is_ok();
        rs.reduced = rs.minimal && rs.compute_reduced();
        Ok(rs)
    }

    pub fn from_presentation(pres: &Presentation) -> Result<Self> {
        RewriteSystem::new(
            pres.alphabet().clone(),
            pres.order().clone(),
            *pres.field(),
            pres.relations().to_vec(),
        )
    }

    fn compute_minimal(&self) -> Result<()> {
        for (i, a) in self.rules.iter().enumerate() {
            for (j, b) in self.rules.iter().enumerate() {
                if i != j && b.lm.contains_subword(&a.lm) {
                    return Err(Error::NotMinimal {
                        contained: self.alphabet.format_word(&a.lm),
                        container: self.alphabet.format_word(&b.lm),
                    });
                }
            }
        }
        Ok(())
    }

    fn compute_reduced(&self) -> bool {
        self.rules.iter().all(|r| {
            r.poly
                .support()
                .filter(|w| **w != r.lm)
                .all(|w| self.rules.iter().all(|g| !w.contains_subword(&g.lm)))
        })
    }

    /// Returns the `NotMinimal` witness when two leading monomials divide
    /// one another.
    pub fn require_minimal(&self) -> Result<()> {
        self.compute_minimal()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Word> {
        self.rules.iter().map(|r| &r.lm)
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn verified_to_degree(&self) -> Option<u64> {
        self.verified_to_degree
    }

    pub fn max_rule_degree(&self) -> u64 {
        self.rules.iter().map(|r| self.order.weight(&r.lm)).max().unwrap_or(0)
    }

    /// Weight of the heaviest ambiguity; checking up to it checks them all.
    pub fn max_overlap_degree(&self) -> u64 {
        self.overlaps().iter().map(|o| self.order.weight(&o.word)).max().unwrap_or(0)
    }

    /// True when no rule LM occurs in `w`.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| !w.contains_subword(&r.lm))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        reduce_with(p, &self.rules, &self.order, None)
    }

    pub fn normal_form_of_word(&self, w: &Word) -> Polynomial {
        self.normal_form(&Polynomial::monomial(w.clone(), self.field.one()))
    }

    /// Normal form together with the steps applied; `p - nf` equals the sum
    /// of `coeff · left · rule · right` over the trace.
    pub fn normal_form_with_trace(&self, p: &Polynomial) -> (Polynomial, Vec<ReductionStep>) {
        let mut trace = Vec::new();
        let nf = reduce_with(p, &self.rules, &self.order, Some(&mut trace));
        (nf, trace)
    }

    /// Every one-step rewrite of the word `w`, as `(position, rule, result)`.
    pub fn one_step_reductions(&self, w: &Word) -> Vec<(usize, usize, Polynomial)> {
        let mut out = Vec::new();
        for (idx, rule) in self.rules.iter().enumerate() {
            for pos in w.occurrences(&rule.lm) {
                let left = w.prefix(pos);
                let right = w.suffix_from(pos + rule.lm.len());
                let mut p = Polynomial::monomial(w.clone(), self.field.one());
                p.add_scaled_wrapped(&-&self.field.one(), &left, &rule.poly, &right);
                out.push((pos, idx, p));
            }
        }
        out
    }

    /// All overlaps and inclusions between rule leading monomials, sorted by
    /// weight, then rule indices, then offset.
    pub fn overlaps(&self) -> Vec<Overlap> {
        let mut out = Vec::new();
        for (i, l) in self.rules.iter().enumerate() {
            for (j, r) in self.rules.iter().enumerate() {
                let (t, s) = (&l.lm, &r.lm);
                // suffix of t (starting at offset) = prefix of s, s sticking out
                for offset in 1..t.len() {
                    let shared = t.len() - offset;
                    if shared < s.len() && t.letters()[offset..] == s.letters()[..shared] {
                        out.push(Overlap {
                            left: i,
                            right: j,
                            word: t.concat(&s.suffix_from(shared)),
                            offset,
                            kind: OverlapKind::Overlap,
                        });
                    }
                }
                if i != j {
                    for offset in t.occurrences(s) {
                        out.push(Overlap {
                            left: i,
                            right: j,
                            word: t.clone(),
                            offset,
                            kind: OverlapKind::Inclusion,
                        });
                    }
                }
            }
        }
        out.sort_by(|a, b| {
            self.order
                .weight(&a.word)
                .cmp(&self.order.weight(&b.word))
                .then(a.left.cmp(&b.left))
                .then(a.right.cmp(&b.right))
                .then(a.offset.cmp(&b.offset))
                .then(a.kind.cmp(&b.kind))
        });
        out.dedup();
        out
    }

    /// The two one-step reductions of an overlap word, left rule first.
    pub fn overlap_reductions(&self, ov: &Overlap) -> (Polynomial, Polynomial) {
        let one = self.field.one();
        let minus = -&one;
        let l = &self.rules[ov.left];
        let r = &self.rules[ov.right];
        let w = Polynomial::monomial(ov.word.clone(), one);
        let mut by_left = w.clone();
        by_left.add_scaled_wrapped(
            &minus,
            &Word::empty(),
            &l.poly,
            &ov.word.suffix_from(l.lm.len()),
        );
        let mut by_right = w;
        by_right.add_scaled_wrapped(
            &minus,
            &ov.word.prefix(ov.offset),
            &r.poly,
            &ov.word.suffix_from(ov.offset + r.lm.len()),
        );
        (by_left, by_right)
    }

    fn resolve(&self, ov: &Overlap) -> Option<Counterexample> {
        let (a, b) = self.overlap_reductions(ov);
        let na = self.normal_form(&a);
        let nb = self.normal_form(&b);
        if na == nb {
            return None;
        }
        let residue = &na - &nb;
        Some(Counterexample {
            overlap: ov.clone(),
            left_normal_form: na,
            right_normal_form: nb,
            residue,
        })
    }

    /// Checks that every ambiguity of weight at most `max_degree` resolves.
    pub fn check_groebner(&self, max_degree: u64) -> Result<GroebnerCheck> {
        if max_degree < self.max_rule_degree() {
            let worst = self.rules.iter().map(|r| &r.lm).max_by_key(|w| self.order.weight(w));
            return Err(Error::BoundExceeded {
                word: worst.map(|w| self.alphabet.format_word(w)).unwrap_or_default(),
                bound: max_degree,
            });
        }
        for ov in self.overlaps() {
            if self.order.weight(&ov.word) > max_degree {
                break;
            }
            if let Some(cx) = self.resolve(&ov) {
                return Ok(GroebnerCheck::Failed(Box::new(cx)));
            }
        }
        Ok(GroebnerCheck::Verified { degree: max_degree })
    }

    /// Runs [`Self::check_groebner`] and records the verified degree.
    pub fn verify(mut self, max_degree: u64) -> Result<std::result::Result<Self, Box<Counterexample>>> {
        match self.check_groebner(max_degree)? {
            GroebnerCheck::Verified { degree } => {
                self.verified_to_degree = Some(degree);
                Ok(Ok(self))
            }
            GroebnerCheck::Failed(cx) => Ok(Err(cx)),
        }
    }

    /// Bounded completion. Each unresolved ambiguity contributes its residue
    /// as a new monic rule, interreducing after every addition. A residue
    /// whose leading monomial is heavier than `max_degree` fails with
    /// `BoundExceeded`. On success every ambiguity resolves, so the result is
    /// a reduced Gröbner basis.
    pub fn complete(&self, max_degree: u64) -> Result<RewriteSystem> {
        let polys: Vec<Polynomial> = self.rules.iter().map(|r| r.poly.clone()).collect();
        let mut polys = interreduce(polys, &self.order)?;
        loop {
            let rs = RewriteSystem::new(
                self.alphabet.clone(),
                self.order.clone(),
                self.field,
                polys.clone(),
            )?;
            let mut pending = None;
            for ov in rs.overlaps() {
                if let Some(cx) = rs.resolve(&ov) {
                    pending = Some(cx);
                    break;
                }
            }
            let Some(cx) = pending else {
                let mut rs = rs;
                let top = rs.overlaps().iter().map(|o| rs.order.weight(&o.word)).max().unwrap_or(0);
                rs.verified_to_degree = Some(top.max(max_degree));
                return Ok(rs);
            };
            let lm = cx.residue.lm(&self.order)?;
            if self.order.weight(lm) > max_degree {
                return Err(Error::BoundExceeded {
                    word: self.alphabet.format_word(lm),
                    bound: max_degree,
                });
            }
            polys.push(cx.residue);
            polys = interreduce(polys, &self.order)?;
        }
    }

    pub fn format_rules(&self) -> Vec<String> {
        self.rules.iter().map(|r| r.poly.format(&self.alphabet, &self.order)).collect()
    }
}
