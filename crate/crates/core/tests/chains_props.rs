mod common;

use std::collections::BTreeSet;

use anick_core::chains::{
    antichain_from_oim, chain_placements, is_chain_top_down, is_prechain, oim_from_antichain,
    prechain_words, split_chain, Chain, WordPoset,
};
use anick_core::{Alphabet, ChainGraph, MonomialOrder, Word};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;

fn chain_words(g: &ChainGraph, n: usize, o: &MonomialOrder) -> BTreeSet<Word> {
    g.chains(n, o).into_iter().map(|c| c.word().clone()).collect()
}

/// Bottom-up and top-down chains agree in degrees 2..=5, and every accepted
/// word has exactly one placement.
fn definitions_match(a: &Alphabet, ac: &[Word]) {
    let (obs, g, o) = graph_of(a, ac);
    for d in 2..=5 {
        let bottom_up = chain_words(&g, d, &o);
        let mut top_down = BTreeSet::new();
        for w in prechain_words(&obs, d - 1) {
            let found = chain_placements(&w, d - 1, &obs);
            assert!(found.len() <= 1, "several placements for {}", a.format_word(&w));
            if !found.is_empty() {
                top_down.insert(w);
            }
        }
        assert_eq!(bottom_up, top_down, "degree {d}, anti-chain {ac:?}");
    }
}

/// The prechain candidates are every prechain: compare against a scan of
/// all words up to `max_len`.
fn prechain_words_are_complete(a: &Alphabet, ac: &[Word], max_len: usize) {
    let (obs, _, _) = graph_of(a, ac);
    for n in 1..=3 {
        let generated = prechain_words(&obs, n);
        for w in a.words_up_to(max_len) {
            assert_eq!(is_prechain(&w, n, &obs), generated.contains(&w), "{}", a.format_word(&w));
        }
    }
}

#[test]
fn definitions_match_on_all_small_two_letter_antichains() {
    let a = Alphabet::new(&["x", "y"]).unwrap();
    let all = all_antichains(&a, 2, 3);
    assert!(all.len() > 100);
    for ac in &all {
        definitions_match(&a, ac);
    }
}

#[test]
fn definitions_match_on_random_three_letter_antichains() {
    let a = Alphabet::new(&["x", "y", "z"]).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let ac = random_antichain(&mut rng, &a, 2, 4, 4);
        definitions_match(&a, &ac);
    }
}

#[test]
fn prechain_candidates_cover_all_prechains() {
    let a = Alphabet::new(&["x", "y"]).unwrap();
    for ac in all_antichains(&a, 2, 3).iter().step_by(7) {
        prechain_words_are_complete(&a, ac, 8);
    }
}

#[test]
fn splitting_is_unique() {
    let a = Alphabet::new(&["x", "y", "z"]).unwrap();
    let example_ac: Vec<Word> = words(&a, &["xxyx", "xxx", "yxz"]).into_iter().collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut families = vec![example_ac];
    families.extend((0..20).map(|_| random_antichain(&mut rng, &a, 2, 3, 3)));
    for ac in families {
        let (obs, g, o) = graph_of(&a, &ac);
        for n in 2..=5 {
            let lower = chain_words(&g, n - 1, &o);
            for c in g.chains(n, &o) {
                let w = c.word();
                let factorizations: Vec<(Word, Word)> = (1..w.len())
                    .map(|i| (w.prefix(i), w.suffix_from(i)))
                    .filter(|(v, u)| lower.contains(v) && obs.is_normal(u))
                    .collect();
                let (p, t) = split_chain(&c).unwrap();
                assert_eq!(factorizations, vec![(p.word().clone(), t)]);
            }
        }
    }
}

#[test]
fn graph_edges_are_sound() {
    let a = Alphabet::new(&["x", "y"]).unwrap();
    for ac in all_antichains(&a, 2, 3) {
        let (_, g, _) = graph_of(&a, &ac);
        for (i, e) in g.edges() {
            if i == 0 {
                assert!(e.witness.is_none());
                continue;
            }
            let st = g.nodes()[i].concat(&g.nodes()[e.target]);
            // naive scan of every window
            let mut hits = Vec::new();
            for start in 0..st.len() {
                for end in start + 1..=st.len() {
                    if ac.contains(&st.slice(start..end)) {
                        hits.push((start, end));
                    }
                }
            }
            assert_eq!(hits.len(), 1);
            assert_eq!(hits[0].1, st.len());
            assert_eq!(e.witness.as_ref(), Some(&st.suffix_from(hits[0].0)));
        }
    }
}

fn assert_placements(c: &Chain) {
    let (s, e) = (c.starts(), c.ends());
    assert_eq!(s.len(), c.degree().saturating_sub(1));
    if s.is_empty() {
        return;
    }
    assert_eq!(s[0], 1);
    assert_eq!(*e.last().unwrap(), c.word().len());
    for k in 0..s.len() {
        assert_eq!(&c.word().slice(s[k] - 1..e[k]), &c.witnesses()[k]);
        if k >= 1 {
            assert!(s[k - 1] < s[k] && s[k] <= e[k - 1] && e[k - 1] < e[k]);
        }
        if k >= 2 {
            assert!(e[k - 2] < s[k]);
        }
    }
}

#[test]
fn placements_satisfy_prechain_inequalities() {
    let a = Alphabet::new(&["x", "y", "z"]).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let ac = random_antichain(&mut rng, &a, 2, 4, 4);
        let (obs, g, o) = graph_of(&a, &ac);
        for n in 2..=5 {
            for c in g.chains(n, &o) {
                assert_placements(&c);
                let td = is_chain_top_down(c.word(), n - 1, &obs).unwrap();
                assert_eq!((td.starts.as_slice(), td.ends.as_slice()), (c.starts(), c.ends()));
                for m in 0..=n {
                    let p = c.bracket_prefix(m).unwrap();
                    assert_eq!(&p.word().concat(&c.bracket_tail(m).unwrap()), c.word());
                }
            }
        }
    }
}

#[test]
fn oim_antichain_bijection_on_example() {
    let a = Alphabet::new(&["x", "y", "z"]).unwrap();
    let poset = WordPoset::new(&a, 4);
    let rs = example_rs();
    let oim: BTreeSet<Word> = poset.words().iter().filter(|w| rs.is_normal_word(w)).cloned().collect();
    let ac = antichain_from_oim(&poset, &oim).unwrap();
    assert_eq!(ac, words(&a, &["xxx", "xxyx", "yxz"]));
    assert_eq!(oim_from_antichain(&poset, &ac).unwrap(), oim);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oim_round_trip_on_random_antichains(seed in any::<u64>()) {
        let a = Alphabet::new(&["x", "y", "z"]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let ac: BTreeSet<Word> = random_antichain(&mut rng, &a, 1, 3, 4).into_iter().collect();
        let poset = WordPoset::new(&a, 4);
        let oim = oim_from_antichain(&poset, &ac).unwrap();
        prop_assert_eq!(antichain_from_oim(&poset, &oim).unwrap(), ac);
    }

    #[test]
    fn bottom_up_chains_are_top_down_chains(seed in any::<u64>()) {
        let a = Alphabet::new(&["x", "y"]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let ac = random_antichain(&mut rng, &a, 2, 4, 3);
        let (obs, g, o) = graph_of(&a, &ac);
        for n in 2..=4 {
            for c in g.chains(n, &o) {
                prop_assert_eq!(chain_placements(c.word(), n - 1, &obs).len(), 1);
            }
        }
    }
}
