mod common;

use proptest::prelude::*;

use zinbiel_core::rational::int;
use zinbiel_core::zinbiel::{
    perm_tensor_check, shuffle, star, tensor_product, to_left_comb, zinbiel_product,
    PermAlgebra, TensorElement,
};
use zinbiel_core::{AWord, MagmaPoly, ZinbElement};

fn el(w: &AWord) -> ZinbElement {
    ZinbElement::word(w.clone())
}

/// Every triple of words over 2 letters with total degree at most `max`.
fn triples(max: usize) -> Vec<(AWord, AWord, AWord)> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in 1..=max - a {
            for c in 1..=max.saturating_sub(a + b) {
                for u in common::words_base_d(2, a) {
                    for v in common::words_base_d(2, b) {
                        for w in common::words_base_d(2, c) {
                            out.push((u.clone(), v.clone(), w));
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn zinbiel_identity_up_to_degree_six() {
    for (u, v, w) in triples(6) {
        let (a, b, c) = (el(&u), el(&v), el(&w));
        let lhs = zinbiel_product(&a, &zinbiel_product(&b, &c));
        let rhs = &zinbiel_product(&zinbiel_product(&a, &b), &c)
            + &zinbiel_product(&zinbiel_product(&b, &a), &c);
        assert_eq!(lhs, rhs, "{u:?} {v:?} {w:?}");
    }
}

#[test]
fn star_is_commutative_and_associative() {
    for (u, v, w) in triples(6) {
        let (a, b, c) = (el(&u), el(&v), el(&w));
        assert_eq!(star(&a, &b), star(&b, &a));
        assert_eq!(star(&star(&a, &b), &c), star(&a, &star(&b, &c)));
    }
}

#[test]
fn star_matches_position_shuffle() {
    for n in 1..=5 {
        for m in 1..=6 - n {
            for u in common::words_base_d(2, n) {
                for v in common::words_base_d(2, m) {
                    let oracle: ZinbElement = common::shuffle_by_positions(&u, &v)
                        .into_iter()
                        .map(|w| (int(1), w))
                        .collect();
                    assert_eq!(shuffle(&u, &v), oracle);
                    assert_eq!(star(&el(&u), &el(&v)), oracle);
                }
            }
        }
    }
}

#[test]
fn shuffle_term_counts_are_binomial() {
    // distinct letters make every interleaving a distinct word
    for n in 1..=4usize {
        for m in 1..=4usize {
            let u = AWord::new((0..n as u32).map(zinbiel_core::Letter).collect()).unwrap();
            let v = AWord::new((n as u32..(n + m) as u32).map(zinbiel_core::Letter).collect())
                .unwrap();
            let s = shuffle(&u, &v);
            assert_eq!(s.len() as u64, common::binomial((n + m) as u64, n as u64));
            assert!(s.iter().all(|(_, c)| c == &int(1)));
        }
    }
}

#[test]
fn degree_n_dimension_is_d_to_the_n() {
    for d in 1..=3usize {
        for n in 1..=5usize {
            let words = AWord::all_of_length(d, n);
            assert_eq!(words.len(), d.pow(n as u32));
            assert_eq!(words, common::words_base_d(d, n));
        }
    }
}

#[test]
fn magmatic_product_matches_shuffle_formula() {
    for n in 1..=5 {
        for m in 1..=6 - n {
            for u in common::words_base_d(2, n) {
                for v in common::words_base_d(2, m) {
                    let magma = MagmaPoly::monomial(u.to_left_comb())
                        .magma_product(&MagmaPoly::monomial(v.to_left_comb()));
                    let via_rewriting = to_left_comb(&magma, 2).unwrap();
                    assert_eq!(via_rewriting, zinbiel_product(&el(&u), &el(&v)));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_bilinear(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let u = common::random_aword(&mut rng, 2, 2);
        let v = common::random_aword(&mut rng, 2, 3);
        let w = common::random_aword(&mut rng, 2, 2);
        let c = common::random_rational(&mut rng);
        let lhs = zinbiel_product(&(&el(&u) + &el(&v).scale(&c)), &el(&w));
        let rhs = &zinbiel_product(&el(&u), &el(&w)) + &zinbiel_product(&el(&v), &el(&w)).scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn perm_tensor_is_commutative_associative(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let p = PermAlgebra::standard(2);
        let samples: Vec<(TensorElement, TensorElement, TensorElement)> = (0..2)
            .map(|_| {
                (
                    common::random_tensor(&mut rng, 2, 2, 3),
                    common::random_tensor(&mut rng, 2, 2, 3),
                    common::random_tensor(&mut rng, 2, 2, 3),
                )
            })
            .collect();
        prop_assert!(perm_tensor_check(&p, &samples).unwrap().passed());
    }
}

#[test]
fn tensor_product_with_corrupted_perm_fails_validation() {
    let bad = PermAlgebra::from_fn(2, |i, _| i);
    assert!(bad.validate().is_err());
    assert!(perm_tensor_check(&bad, &[]).is_err());
}

#[test]
fn tensor_product_by_hand() {
    // (e0⊗x)(e1⊗y) = e0e1⊗xy + e1e0⊗yx = e1⊗xy + e0⊗yx
    use zinbiel_core::Letter;
    let p = PermAlgebra::standard(2);
    let (x, y) = (Letter(0), Letter(1));
    let a = TensorElement::monomial((0, AWord::letter(x)));
    let b = TensorElement::monomial((1, AWord::letter(y)));
    let expected = TensorElement::from_terms([
        (int(1), (1, AWord::new(vec![x, y]).unwrap())),
        (int(1), (0, AWord::new(vec![y, x]).unwrap())),
    ]);
    assert_eq!(tensor_product(&p, &a, &b), expected);
}
