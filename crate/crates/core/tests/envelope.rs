mod common;

use zinbiel_core::envelope::{collapse_check, corollary_count, trivial_gsb, truncated_poly_relations};
use zinbiel_core::gsb::{irreducible_counts, verify_gsb, Reducer};
use zinbiel_core::rational::rat;
use zinbiel_core::{CommAlgebra, Letter, MagmaPoly, NaWord};

#[test]
fn trivial_counts_follow_formula() {
    for d in 1..=3usize {
        let counts = irreducible_counts(&trivial_gsb(d), 6);
        for (n, c) in counts.iter().enumerate() {
            assert_eq!(*c as u128, corollary_count(d as u64, n as u32 + 1), "d={d} n={}", n + 1);
            assert_eq!(*c, common::paired_descending_combs(d, n + 1).len());
        }
    }
}

#[test]
fn single_letter_trivial_envelope_vanishes_above_one() {
    let counts = irreducible_counts(&trivial_gsb(1), 6);
    assert_eq!(counts, vec![1, 0, 0, 0, 0, 0]);
}

#[test]
fn listed_truncated_relations_agree_with_completion() {
    for n in 1..=3 {
        let listed = truncated_poly_relations(n);
        assert!(verify_gsb(&listed, 4).unwrap().verified(), "n={n}");
        let completed = collapse_check(&CommAlgebra::truncated_polynomial(n), 4).unwrap();
        let a = Reducer::new(&listed, 4);
        let b = Reducer::new(&completed.relations, 4);
        for i in 0..n {
            for j in 0..n {
                let w = MagmaPoly::monomial(NaWord::node(
                    NaWord::leaf(Letter(i as u32)),
                    NaWord::leaf(Letter(j as u32)),
                ));
                assert_eq!(a.normal_form(&w).unwrap(), b.normal_form(&w).unwrap());
            }
        }
    }
}

#[test]
fn idempotent_collapse_at_several_bounds() {
    for bound in 3..=5 {
        let r = collapse_check(&CommAlgebra::idempotent(), bound).unwrap();
        assert!(r.counts.iter().all(|&c| c == 0));
        // x * x = x cannot be recovered once x = 0
        assert!(!r.star_matches());
    }
}

#[test]
fn scaled_idempotent_also_collapses() {
    let mut a = CommAlgebra::trivial_standard(1);
    a.set_product(0, 0, vec![rat(3, 1)]).unwrap();
    let r = collapse_check(&a, 3).unwrap();
    assert!(r.counts.iter().all(|&c| c == 0));
}
