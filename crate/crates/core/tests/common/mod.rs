#![allow(dead_code)]

use std::collections::BTreeSet;

use anick_core::chains::{build_chain_graph, ObstructionSet};
use anick_core::{Alphabet, ChainGraph, MonomialOrder, Presentation, RewriteSystem, Word};
use rand::seq::SliceRandom;
use rand::Rng;

pub const EXAMPLE_GENERATORS: [&str; 3] = ["x", "y", "z"];
pub const EXAMPLE_RELATIONS: [&str; 3] = ["x*x*y*x", "x*x*x - x*x", "y*x*z - y*x"];

pub fn example() -> Presentation {
    Presentation::parse_deglex(&EXAMPLE_GENERATORS, &EXAMPLE_RELATIONS).unwrap()
}

pub fn example_rs() -> RewriteSystem {
    RewriteSystem::from_presentation(&example()).unwrap()
}

pub fn idempotent() -> Presentation {
    Presentation::from_json(
        r#"{"generators":["x"],"relations":["x*x - x"],"augmentation":{"x":"1"}}"#,
    )
    .unwrap()
}

pub fn words(a: &Alphabet, list: &[&str]) -> BTreeSet<Word> {
    list.iter().map(|s| a.parse_word(s).unwrap()).collect()
}

pub fn is_antichain(ws: &[Word]) -> bool {
    ws.iter().all(|a| ws.iter().all(|b| a == b || !a.is_subword_of(b)))
}

/// Every nonempty anti-chain of words with lengths in `min_len..=max_len`.
pub fn all_antichains(a: &Alphabet, min_len: usize, max_len: usize) -> Vec<Vec<Word>> {
    let pool: Vec<Word> =
        a.words_up_to(max_len).into_iter().filter(|w| w.len() >= min_len).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_antichains(&pool, 0, &mut current, &mut out);
    out
}

fn extend_antichains(pool: &[Word], from: usize, current: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
    if !current.is_empty() {
        out.push(current.clone());
    }
    for i in from..pool.len() {
        let w = &pool[i];
        if current.iter().all(|c| !c.is_subword_of(w) && !w.is_subword_of(c)) {
            current.push(w.clone());
            extend_antichains(pool, i + 1, current, out);
            current.pop();
        }
    }
}

/// A random nonempty anti-chain of at most `max_size` words.
pub fn random_antichain<R: Rng>(
    rng: &mut R,
    a: &Alphabet,
    min_len: usize,
    max_len: usize,
    max_size: usize,
) -> Vec<Word> {
    let letters: Vec<u16> = a.letters().collect();
    let target = rng.gen_range(1..=max_size);
    let mut out: Vec<Word> = Vec::new();
    for _ in 0..50 {
        if out.len() == target {
            break;
        }
        let len = rng.gen_range(min_len..=max_len);
        let w = Word::from_letters(
            (0..len).map(|_| *letters.choose(rng).unwrap()).collect::<Vec<_>>(),
        );
        if out.iter().all(|c| !c.is_subword_of(&w) && !w.is_subword_of(c)) {
            out.push(w);
        }
    }
    out
}

pub fn graph_of(a: &Alphabet, ws: &[Word]) -> (ObstructionSet, ChainGraph, MonomialOrder) {
    let obs = ObstructionSet::new(ws.iter().cloned(), a).unwrap();
    let g = build_chain_graph(&obs, a);
    (obs, g, MonomialOrder::deglex(a))
}
