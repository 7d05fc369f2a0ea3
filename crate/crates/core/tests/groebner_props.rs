mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use anick_core::groebner::{
    count_normal_words, leading_monomials_oracle, normal_words, NormalWordAutomaton,
};
use anick_core::{Alphabet, Field, MonomialOrder, Polynomial, RewriteSystem, Word};
use common::*;
use proptest::prelude::*;

fn word_strategy(letters: u16, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 0..=max_len).prop_map(Word::from_letters)
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((word_strategy(3, max_len), -5i64..=5), 0..6).prop_map(|terms| {
        terms.into_iter().map(|(w, c)| (w, Field::Rational.from_i64(c))).collect()
    })
}

fn xyz() -> Alphabet {
    Alphabet::new(&["x", "y", "z"]).unwrap()
}

proptest! {
    #[test]
    fn order_is_total_and_antisymmetric(a in word_strategy(3, 6), b in word_strategy(3, 6)) {
        let o = MonomialOrder::deglex(&xyz());
        prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
        prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
        prop_assert_eq!(o.compare(&a, &b), o.key(&a).cmp(&o.key(&b)));
    }

    #[test]
    fn order_is_transitive(
        a in word_strategy(3, 5), b in word_strategy(3, 5), c in word_strategy(3, 5),
        weights in prop::collection::vec(1u32..4, 3),
    ) {
        let o = MonomialOrder::weighted(&xyz(), weights).unwrap();
        if o.compare(&a, &b).is_le() && o.compare(&b, &c).is_le() {
            prop_assert!(o.compare(&a, &c).is_le());
        }
    }

    #[test]
    fn order_is_compatible_with_concatenation(
        u in word_strategy(3, 5), v in word_strategy(3, 5),
        l in word_strategy(3, 3), r in word_strategy(3, 3),
        weights in prop::collection::vec(1u32..4, 3),
    ) {
        let o = MonomialOrder::weighted(&xyz(), weights).unwrap();
        prop_assert_eq!(o.compare(&u, &v), o.compare(&u.wrap(&l, &r), &v.wrap(&l, &r)));
        // the empty word is the minimum
        prop_assert!(o.compare(&Word::empty(), &u).is_le());
    }

    #[test]
    fn polynomial_text_round_trip(p in poly_strategy(4)) {
        let a = xyz();
        let o = MonomialOrder::deglex(&a);
        let text = p.format(&a, &o);
        prop_assert_eq!(Polynomial::parse(&text, &a, &Field::Rational).unwrap(), p.clone());
        prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn polynomial_ring_axioms(p in poly_strategy(3), q in poly_strategy(3), r in poly_strategy(3)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
        let one = Polynomial::constant(Field::Rational.one());
        prop_assert_eq!(&p * &one, p.clone());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        p in poly_strategy(6), q in poly_strategy(6), a in -4i64..=4, b in -4i64..=4,
    ) {
        let rs = example_rs();
        let f = Field::Rational;
        let np = rs.normal_form(&p);
        prop_assert_eq!(rs.normal_form(&np), np.clone());
        prop_assert!(np.support().all(|w| rs.is_normal_word(w)));
        let combo = &p.scale(&f.from_i64(a)) + &q.scale(&f.from_i64(b));
        let expected = &np.scale(&f.from_i64(a)) + &rs.normal_form(&q).scale(&f.from_i64(b));
        prop_assert_eq!(rs.normal_form(&combo), expected);
    }

    #[test]
    fn reduction_trace_stays_in_the_ideal(p in poly_strategy(7)) {
        let rs = example_rs();
        let (nf, trace) = rs.normal_form_with_trace(&p);
        let mut recon = nf;
        for s in &trace {
            recon.add_scaled_wrapped(&s.coeff, &s.left, rs.rules()[s.rule].poly(), &s.right);
        }
        prop_assert_eq!(recon, p);
    }

    #[test]
    fn automaton_counts_match_enumeration(seed in any::<u64>()) {
        use rand::SeedableRng;
        let a = Alphabet::new(&["x", "y"]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let ac = random_antichain(&mut rng, &a, 2, 4, 3);
        let aut = NormalWordAutomaton::new(&ac, 2);
        let counts = aut.count_by_length(8);
        for (len, count) in counts.iter().enumerate() {
            let brute = a
                .words_up_to(len)
                .into_iter()
                .filter(|w| w.len() == len && ac.iter().all(|o| !w.contains_subword(o)))
                .count();
            prop_assert_eq!(count, &num_bigint::BigUint::from(brute));
        }
    }
}

#[test]
fn example_is_confluent_up_to_weight_six() {
    let rs = example_rs();
    let a = xyz();
    for w in a.words_up_to(6) {
        let target = rs.normal_form_of_word(&w);
        for (_, _, step) in rs.one_step_reductions(&w) {
            assert_eq!(rs.normal_form(&step), target, "{}", a.format_word(&w));
        }
    }
}

#[test]
fn normal_words_complement_the_ideal() {
    // words split into leading monomials of the ideal and normal words
    let pres = example();
    let rs = example_rs();
    let lms = leading_monomials_oracle(&pres, 5);
    let normal: BTreeSet<Word> = normal_words(&rs, 5).into_iter().collect();
    for w in pres.alphabet().words_up_to(5) {
        assert!(lms.contains(&w) != normal.contains(&w), "{}", pres.format_word(&w));
    }
}

#[test]
fn completion_matches_the_oracle() {
    let pres = anick_core::Presentation::parse_deglex(&["x", "y"], &["x*y - y", "y*x - x"]).unwrap();
    let done = RewriteSystem::from_presentation(&pres).unwrap().complete(6).unwrap();
    // xx - x only appears through products of weight 3, so the truncated
    // span needs headroom above the words being compared
    let lms = leading_monomials_oracle(&pres, 6);
    for w in pres.alphabet().words_up_to(3) {
        assert_eq!(lms.contains(&w), !done.is_normal_word(&w), "{}", pres.format_word(&w));
    }
}

#[test]
fn counts_agree_with_listing() {
    let rs = example_rs();
    let counts = count_normal_words(&rs, 7);
    let listed = normal_words(&rs, 7);
    for (len, c) in counts.iter().enumerate() {
        let n = listed.iter().filter(|w| w.len() == len).count();
        assert_eq!(c, &num_bigint::BigUint::from(n));
    }
}
