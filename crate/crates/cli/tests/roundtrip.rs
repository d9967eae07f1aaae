use proptest::prelude::*;
use zinbiel_cli::algebra_file::{parse_algebra, AlgebraFile};
use zinbiel_cli::syntax::{format_poly, parse_aword, parse_poly, parse_word};
use zinbiel_core::rational::rat;
use zinbiel_core::{Alphabet, AWord, CommAlgebra, Letter, MagmaPoly, NaWord};

fn word(d: u32) -> impl Strategy<Value = NaWord> {
    let leaf = (0..d).prop_map(|l| NaWord::leaf(Letter(l)));
    leaf.prop_recursive(4, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| NaWord::node(a, b))
    })
}

fn poly(d: u32) -> impl Strategy<Value = MagmaPoly> {
    prop::collection::vec(((-6i64..=6, 1i64..=4), word(d)), 0..5).prop_map(|terms| {
        MagmaPoly::from_terms(terms.into_iter().map(|((n, q), w)| (rat(n, q), w)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn words_round_trip(w in word(3)) {
        let a = Alphabet::standard(3);
        let text = a.fmt_word(&w);
        prop_assert_eq!(parse_word(&text, &a).unwrap(), w);
    }

    #[test]
    fn polynomials_round_trip(p in poly(3)) {
        let a = Alphabet::standard(3);
        let text = format_poly(&a, &p);
        prop_assert_eq!(parse_poly(&text, &a).unwrap(), p.clone());
        let named = Alphabet::new(["alpha", "b2", "c_3"]).unwrap();
        prop_assert_eq!(parse_poly(&format_poly(&named, &p), &named).unwrap(), p);
    }

    #[test]
    fn associative_words_round_trip(letters in prop::collection::vec(0u32..3, 1..6)) {
        let a = Alphabet::standard(3);
        let w = AWord::new(letters.into_iter().map(Letter).collect()).unwrap();
        prop_assert_eq!(parse_aword(&a.fmt_aword(&w), &a).unwrap(), w);
    }

    #[test]
    fn algebra_files_round_trip(
        dim in 1usize..4,
        entries in prop::collection::vec((-5i64..=5, 1i64..=3), 27),
        levels in prop::option::of(prop::collection::vec(1u32..4, 3)),
    ) {
        let names: Vec<String> = (0..dim).map(|i| format!("e{i}")).collect();
        let mut a = CommAlgebra::trivial(names).unwrap();
        let mut it = entries.into_iter();
        for i in 0..dim {
            for j in i..dim {
                let coords = (0..dim).map(|_| {
                    let (n, q) = it.next().unwrap();
                    rat(n, q)
                }).collect();
                a.set_product(i, j, coords).unwrap();
            }
        }
        let levels = levels.map(|l| l[..dim].to_vec());
        let file = AlgebraFile::from_algebra(&a, levels.as_deref());
        let back = parse_algebra(&file.to_json()).unwrap();
        prop_assert_eq!(&back.algebra, &a);
        prop_assert_eq!(back.levels, levels);
    }
}
