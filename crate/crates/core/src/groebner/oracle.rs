//! Brute-force leading monomials of a truncated ideal, by linear algebra.
//!
//! Independent of rewriting: it never calls a normal-form routine.

use std::collections::{BTreeSet, HashMap};

use crate::poly::Polynomial;
use crate::presentation::Presentation;
use crate::word::Word;

/// Leading monomials of `span{u·g·v : g ∈ R, weight(u·g·v) ≤ max_degree}`.
///
/// The spanning products are row-reduced with pivots on the largest word;
/// the pivot words are returned. Exponential in `max_degree`.
pub fn leading_monomials_oracle(pres: &Presentation, max_degree: u64) -> BTreeSet<Word> {
    let order = pres.order();
    let min_weight = order.weights().iter().copied().min().unwrap_or(1) as u64;
    let max_len = (max_degree / min_weight) as usize;
    let words: Vec<Word> = pres
        .alphabet()
        .words_up_to(max_len)
        .into_iter()
        .filter(|w| order.weight(w) <= max_degree)
        .collect();

    let mut pivots: HashMap<Word, Polynomial> = HashMap::new();
    for g in pres.relations() {
        let deg = g.degree(order);
        if deg > max_degree {
            continue;
        }
        let room = max_degree - deg;
        for u in words.iter().filter(|u| order.weight(u) <= room) {
            let left_room = room - order.weight(u);
            for v in words.iter().filter(|v| order.weight(v) <= left_room) {
                insert_row(&mut pivots, g.wrap(u, v), pres);
            }
        }
    }
    pivots.into_keys().collect()
}

fn insert_row(pivots: &mut HashMap<Word, Polynomial>, mut row: Polynomial, pres: &Presentation) {
    let order = pres.order();
    while !row.is_zero() {
        let (lm, lc) = {
            let (w, c) = row.leading_term(order).expect("nonzero row");
            (w.clone(), c.clone())
        };
        match pivots.get(&lm) {
            Some(pivot) => row = &row - &pivot.scale(&lc),
            None => {
                let monic = row.scale(&lc.inv());
                pivots.insert(lm, monic);
                return;
            }
        }
    }
}
