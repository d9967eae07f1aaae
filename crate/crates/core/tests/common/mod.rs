//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zinbiel_core::compoly::{ComMonomial, ComPoly, GenSymbol};
use zinbiel_core::linalg;
use zinbiel_core::rational::{int, rat};
use zinbiel_core::word::words_by_length;
use zinbiel_core::zinbiel::TensorElement;
use zinbiel_core::{AWord, CommAlgebra, Letter, MagmaPoly, NaWord, TruncSeries};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero 3-dimensional commutative associative algebra with
/// `eᵢeⱼ ∈ span(e_k : k > max(i, j))`, presented in a random integer basis.
pub fn random_nilpotent(rng: &mut ChaCha8Rng) -> CommAlgebra {
    loop {
        let mut a = CommAlgebra::trivial_standard(3);
        let mut c = || rng.random_range(-3i64..=3);
        let (p, q, r, s) = (c(), c(), c(), c());
        a.set_product(0, 0, a.combination(&[(1, p), (2, q)])).unwrap();
        a.set_product(0, 1, a.combination(&[(2, r)])).unwrap();
        a.set_product(1, 1, a.combination(&[(2, s)])).unwrap();
        if a.is_zero_product() || !a.is_associative() {
            continue;
        }
        let rows: Vec<Vec<_>> = (0..3)
            .map(|_| (0..3).map(|_| int(rng.random_range(-2i64..=2))).collect())
            .collect();
        if linalg::rank(&rows) < 3 {
            continue;
        }
        let names = vec!["u".to_string(), "v".to_string(), "w".to_string()];
        return a.change_basis(&rows, names).unwrap();
    }
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> zinbiel_core::Rational {
    let num = rng.random_range(-5i64..=5);
    let den = rng.random_range(1i64..=4);
    rat(num, den)
}

/// Up to `terms` random monomials of length ≤ `max_len` over `d` letters.
pub fn random_magma_poly(rng: &mut ChaCha8Rng, d: usize, max_len: usize, terms: usize) -> MagmaPoly {
    let words: Vec<NaWord> = words_by_length(d, max_len).into_iter().flatten().collect();
    let mut p = MagmaPoly::zero();
    for _ in 0..rng.random_range(1..=terms) {
        let w = words[rng.random_range(0..words.len())].clone();
        p.add_term(w, random_rational(rng));
    }
    p
}

pub fn random_aword(rng: &mut ChaCha8Rng, d: usize, len: usize) -> AWord {
    AWord::new(
        (0..len)
            .map(|_| Letter(rng.random_range(0..d as u32)))
            .collect(),
    )
    .unwrap()
}

/// A random element of `P ⊗ Z` with words of length `1..=max_len`.
pub fn random_tensor(rng: &mut ChaCha8Rng, dim: usize, d: usize, max_len: usize) -> TensorElement {
    let mut t = TensorElement::zero();
    for _ in 0..rng.random_range(1..=2) {
        let len = rng.random_range(1..=max_len);
        let key = (rng.random_range(0..dim), random_aword(rng, d, len));
        t.add_term(key, int(rng.random_range(1i64..=3)));
    }
    t
}

/// A random series truncated at `n` whose coefficients are small
/// polynomials in weight-1..n symbols of one base letter.
pub fn random_series(rng: &mut ChaCha8Rng, n: usize) -> TruncSeries {
    TruncSeries::from_coeffs(
        n,
        (1..=n).map(|deg| {
            if rng.random_bool(0.3) {
                return ComPoly::zero();
            }
            let mut p = ComPoly::zero();
            for _ in 0..rng.random_range(1..=2) {
                let base = rng.random_range(0..2usize);
                let m = if deg >= 2 && rng.random_bool(0.5) {
                    let i = rng.random_range(1..deg as u32);
                    ComMonomial::new(vec![
                        GenSymbol::new(base, 1, i),
                        GenSymbol::new(base, 1, deg as u32 - i),
                    ])
                } else {
                    ComMonomial::var(GenSymbol::new(base, 1, deg as u32))
                };
                p.add_term(m, random_rational(rng));
            }
            p
        }),
    )
}

/// All associative words of length exactly `n` over `d` letters, built by
/// counting in base `d`.
pub fn words_base_d(d: usize, n: usize) -> Vec<AWord> {
    (0..d.pow(n as u32))
        .map(|mut code| {
            let mut letters = vec![Letter(0); n];
            for slot in letters.iter_mut().rev() {
                *slot = Letter((code % d) as u32);
                code /= d;
            }
            AWord::new(letters).unwrap()
        })
        .collect()
}

/// The shuffle of `u` and `v` by choosing which positions of the result
/// come from `u`.
pub fn shuffle_by_positions(u: &AWord, v: &AWord) -> Vec<AWord> {
    let (m, n) = (u.len(), v.len());
    let mut out = Vec::new();
    for mask in 0u32..(1 << (m + n)) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let (mut i, mut j) = (0, 0);
        let mut letters = Vec::with_capacity(m + n);
        for pos in 0..m + n {
            if mask & (1 << pos) != 0 {
                letters.push(u.letters()[i]);
                i += 1;
            } else {
                letters.push(v.letters()[j]);
                j += 1;
            }
        }
        out.push(AWord::new(letters).unwrap());
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Left combs `[z₁, …, z_m]` with `z₁ > z₂, z₃ > z₄, …`, enumerated directly.
pub fn paired_descending_combs(d: usize, m: usize) -> Vec<NaWord> {
    words_base_d(d, m)
        .into_iter()
        .filter(|w| {
            w.letters()
                .chunks(2)
                .all(|c| c.len() == 1 || c[0] > c[1])
        })
        .map(|w| w.to_left_comb())
        .collect()
}
