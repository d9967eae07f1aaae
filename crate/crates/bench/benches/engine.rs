use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use zinbiel_core::embed::verify_embedding;
use zinbiel_core::envelope::verify_zinbiel_family;
use zinbiel_core::filtered::standard_filtration;
use zinbiel_core::gsb::{Family, Reducer, RelationSchema, RelationSet};
use zinbiel_core::zinbiel::shuffle;
use zinbiel_core::{AWord, CommAlgebra, Direction, Letter, MagmaPoly, NaWord};

fn gsb_check(c: &mut Criterion) {
    c.bench_function("zinbiel family compositions d=2 bound 5", |b| {
        b.iter(|| verify_zinbiel_family(black_box(2), black_box(5)).unwrap())
    });
}

fn normal_form(c: &mut Criterion) {
    let set = RelationSet::with_schemas(2, [RelationSchema::family(Family::Zinbiel)]);
    let letters: Vec<Letter> = [0, 1, 0, 1, 1, 0, 1].into_iter().map(Letter).collect();
    let w = NaWord::bracket(&letters, Direction::Right).unwrap();
    let p = MagmaPoly::monomial(w);
    let reducer = Reducer::new(&set, letters.len());
    c.bench_function("right comb normal form length 7", |b| {
        b.iter(|| reducer.normal_form(black_box(&p)).unwrap())
    });
}

fn shuffle_product(c: &mut Criterion) {
    let u = AWord::new([0, 1, 2, 0, 1].into_iter().map(Letter).collect()).unwrap();
    let v = AWord::new([2, 1, 0, 2, 2].into_iter().map(Letter).collect()).unwrap();
    c.bench_function("shuffle 5 x 5", |b| b.iter(|| shuffle(black_box(&u), black_box(&v))));
}

fn embedding(c: &mut Criterion) {
    let a = standard_filtration(&CommAlgebra::truncated_polynomial(3)).unwrap();
    c.bench_function("embedding truncated cubic N=6", |b| {
        b.iter(|| verify_embedding(black_box(&a), 6).unwrap())
    });
}

criterion_group!(benches, gsb_check, normal_form, shuffle_product, embedding);
criterion_main!(benches);
