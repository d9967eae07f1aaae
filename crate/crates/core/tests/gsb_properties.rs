mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use zinbiel_core::envelope::{collapse_check, trivial_gsb};
use zinbiel_core::gsb::{
    complete, irreducible_words, normal_form, replay, verify_gsb, Family, Reducer,
    RelationSchema, RelationSet, Strategy,
};
use zinbiel_core::word::{compare_words, words_by_length};
use zinbiel_core::{CommAlgebra, MagmaPoly, NaWord};

fn zinbiel(d: usize) -> RelationSet {
    RelationSet::with_schemas(d, [RelationSchema::Family(Family::Zinbiel)])
}

fn truncated_envelope(n: usize, bound: usize) -> RelationSet {
    collapse_check(&CommAlgebra::truncated_polynomial(n), bound)
        .unwrap()
        .relations
}

fn sets() -> &'static [(&'static str, RelationSet, usize)] {
    static SETS: OnceLock<Vec<(&'static str, RelationSet, usize)>> = OnceLock::new();
    SETS.get_or_init(|| {
        vec![
            ("zinbiel", zinbiel(2), 2),
            ("trivial-gsb", trivial_gsb(2), 2),
            ("truncated-3", truncated_envelope(3, 6), 3),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strategies_agree(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        for (name, set, d) in sets().iter() {
            let p = common::random_magma_poly(&mut rng, *d, 6, 4);
            let a = Reducer::new(set, 6).normal_form(&p).unwrap();
            let b = Reducer::new(set, 6)
                .with_strategy(Strategy::LeftmostFirst)
                .normal_form(&p)
                .unwrap();
            prop_assert_eq!(a, b, "{}", name);
        }
    }

    #[test]
    fn normal_forms_are_idempotent_and_irreducible(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        for (_, set, d) in sets().iter() {
            let p = common::random_magma_poly(&mut rng, *d, 6, 4);
            let nf = normal_form(&p, set, 6).unwrap();
            prop_assert_eq!(normal_form(&nf, set, 6).unwrap(), nf.clone());
            for w in nf.keys() {
                prop_assert!(!set.is_reducible(w));
            }
        }
    }

    #[test]
    fn normal_form_is_linear(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let set = trivial_gsb(2);
        let p = common::random_magma_poly(&mut rng, 2, 6, 3);
        let q = common::random_magma_poly(&mut rng, 2, 6, 3);
        let c = common::random_rational(&mut rng);
        let lhs = normal_form(&(&p + &q.scale(&c)), &set, 6).unwrap();
        let rhs = &normal_form(&p, &set, 6).unwrap()
            + &normal_form(&q, &set, 6).unwrap().scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_replays(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let set = trivial_gsb(2);
        let p = common::random_magma_poly(&mut rng, 2, 6, 4);
        let (nf, trace) = Reducer::new(&set, 6).normal_form_traced(&p).unwrap();
        prop_assert_eq!(replay(&trace), &p - &nf);
        if let Some(lead) = p.leading_key() {
            for step in &trace {
                prop_assert!(&step.word <= lead);
            }
        }
    }

    #[test]
    fn order_is_monomial(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let words: Vec<NaWord> = words_by_length(3, 5).into_iter().flatten().collect();
        let mut pick = || {
            use rand::Rng;
            words[rng.random_range(0..words.len())].clone()
        };
        let (u, v, c) = (pick(), pick(), pick());
        let ord = compare_words(&u, &v);
        prop_assert_eq!(
            compare_words(&NaWord::node(u.clone(), c.clone()), &NaWord::node(v.clone(), c.clone())),
            ord
        );
        prop_assert_eq!(
            compare_words(&NaWord::node(c.clone(), u), &NaWord::node(c, v)),
            ord
        );
    }
}

#[test]
fn zinbiel_normal_forms_are_left_combs() {
    let set = zinbiel(2);
    for level in words_by_length(2, 6) {
        for w in level {
            let nf = normal_form(&MagmaPoly::monomial(w), &set, 6).unwrap();
            assert!(nf.keys().all(NaWord::is_left_comb));
        }
    }
}

#[test]
fn trivial_gsb_irreducibles_are_paired_descending_combs() {
    for d in 1..=3 {
        let irr = irreducible_words(&trivial_gsb(d), 6);
        for (n, words) in irr.iter().enumerate() {
            let mut expected = common::paired_descending_combs(d, n + 1);
            expected.sort();
            assert_eq!(words, &expected, "d={d} n={}", n + 1);
        }
    }
}

#[test]
fn completion_result_verifies_at_its_bound() {
    let a = CommAlgebra::truncated_polynomial(2);
    let set = zinbiel_core::envelope::enveloping_relations(&a).unwrap();
    let done = complete(&set, 5).unwrap();
    assert!(verify_gsb(&done.relations, 5).unwrap().verified());
    let again = complete(&done.relations, 5).unwrap();
    assert!(again.added.is_empty());
}

#[test]
fn inconsistent_anticommutator_without_zinbiel_is_not_a_gsb() {
    // xy + yx together with xy − yx forces xy and yx separately
    let mut set = RelationSet::new(2);
    let x = NaWord::leaf(zinbiel_core::Letter(0));
    let y = NaWord::leaf(zinbiel_core::Letter(1));
    let xy = MagmaPoly::monomial(NaWord::node(x.clone(), y.clone()));
    let yx = MagmaPoly::monomial(NaWord::node(y, x));
    set.push_explicit(&(&xy + &yx)).unwrap();
    set.push_explicit(&(&xy - &yx)).unwrap();
    let report = verify_gsb(&set, 2).unwrap();
    assert_eq!(report.failures.len(), 2);
}
