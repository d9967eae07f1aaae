//! Universal pre-commutative envelopes of commutative algebras and the
//! drivers that check the trivial-algebra basis, the odd/even lemma, the
//! idempotent obstruction and the truncated-polynomial envelope.

use rayon::prelude::*;

use crate::algebra::CommAlgebra;
use crate::error::{Error, Result};
use crate::gsb::{
    complete, irreducible_counts, verify_gsb, Family, GsbReport, Reducer, RelationSchema,
    RelationSet,
};
use crate::poly::MagmaPoly;
use crate::rational::{rat, Rational};
use crate::word::{left_combs, Letter, NaWord};

fn pair(i: usize, j: usize) -> NaWord {
    NaWord::node(NaWord::leaf(Letter(i as u32)), NaWord::leaf(Letter(j as u32)))
}

fn linear(coords: &[Rational]) -> MagmaPoly {
    coords
        .iter()
        .enumerate()
        .map(|(k, c)| (c.clone(), NaWord::leaf(Letter(k as u32))))
        .collect()
}

/// `xᵢxⱼ + xⱼxᵢ` as a polynomial (equals `2xᵢxᵢ` on the diagonal).
pub fn anticommutator(i: usize, j: usize) -> MagmaPoly {
    &MagmaPoly::monomial(pair(i, j)) + &MagmaPoly::monomial(pair(j, i))
}

/// The Zinbiel family plus `xy + yx − x*y` for every basis pair `x ≤ y`,
/// all monic. Letters are the basis in input order.
pub fn enveloping_relations(a: &CommAlgebra) -> Result<RelationSet> {
    let d = a.dim();
    let mut set = RelationSet::new(d);
    set.push(RelationSchema::Family(Family::Zinbiel));
    for i in 0..d {
        for j in i..d {
            let rel = &anticommutator(i, j) - &linear(a.product(i, j));
            let (lead, _) = rel.leading_and_monic()?;
            if lead != pair(i, j) {
                return Err(Error::Precondition(format!(
                    "envelope relation for ({i}, {j}) does not lead with x{i}x{j}"
                )));
            }
            set.push_explicit(&rel)?;
        }
    }
    Ok(set)
}

/// The five-family basis for the envelope of a trivial algebra on `d`
/// letters: Zinbiel, `xy + yx` (x < y), `xx`, and the even-comb families.
pub fn trivial_gsb(d: usize) -> RelationSet {
    assert!(d >= 1, "alphabet must be nonempty");
    let mut set = RelationSet::new(d);
    set.push(RelationSchema::Family(Family::Zinbiel));
    for i in 0..d {
        for j in i + 1..d {
            set.push(RelationSchema::Explicit(anticommutator(i, j)));
        }
    }
    for i in 0..d {
        set.push(RelationSchema::Explicit(MagmaPoly::monomial(pair(i, i))));
    }
    set.push(RelationSchema::Family(Family::EvenCombAnticommute));
    set.push(RelationSchema::Family(Family::EvenCombSquare));
    set
}

/// `C(d,2)^⌊n/2⌋ · d^(n mod 2)`.
pub fn corollary_count(d: u64, n: u32) -> u128 {
    let pairs = (d as u128) * (d as u128).saturating_sub(1) / 2;
    pairs.pow(n / 2) * (d as u128).pow(n % 2)
}

/// The Zinbiel family plus `xᵢxⱼ − (j/(i+j))x_{i+j}` for `i + j ≤ n` and
/// `xᵢxⱼ` for `i + j > n`, over all ordered pairs on `x1 < … < xn`.
pub fn truncated_poly_relations(n: usize) -> RelationSet {
    assert!(n >= 1);
    let mut set = RelationSet::new(n);
    set.push(RelationSchema::Family(Family::Zinbiel));
    for i in 1..=n {
        for j in 1..=n {
            let mut rel = MagmaPoly::monomial(pair(i - 1, j - 1));
            if i + j <= n {
                rel.add_term(
                    NaWord::leaf(Letter((i + j - 1) as u32)),
                    -rat(j as i64, (i + j) as i64),
                );
            }
            set.push(RelationSchema::Explicit(rel));
        }
    }
    set
}

/// Bounded check that the Zinbiel family alone is a Gröbner–Shirshov basis.
pub fn verify_zinbiel_family(d: usize, bound: usize) -> Result<GsbReport> {
    let set = RelationSet::with_schemas(d, [RelationSchema::Family(Family::Zinbiel)]);
    verify_gsb(&set, bound)
}

#[derive(Clone, Debug)]
pub struct TrivialEnvelopeReport {
    pub gsb: GsbReport,
    pub counts: Vec<usize>,
    pub expected: Vec<u128>,
    /// Irreducible counts after completing the envelope relations alone.
    pub completion_counts: Vec<usize>,
    pub completion_added: usize,
}

impl TrivialEnvelopeReport {
    pub fn counts_match(&self) -> bool {
        self.counts.len() == self.expected.len()
            && self
                .counts
                .iter()
                .zip(&self.expected)
                .all(|(&c, &e)| c as u128 == e)
    }

    pub fn passed(&self) -> bool {
        self.gsb.verified() && self.counts_match() && self.completion_counts == self.counts
    }
}

/// Verifies the five-family basis, compares its irreducible counts with the
/// closed formula, and checks that completing the plain envelope relations
/// of the trivial algebra reaches the same counts.
pub fn verify_trivial_envelope(d: usize, bound: usize) -> Result<TrivialEnvelopeReport> {
    if d == 0 || bound < 2 {
        return Err(Error::Precondition("need d ≥ 1 and bound ≥ 2".into()));
    }
    let set = trivial_gsb(d);
    let gsb = verify_gsb(&set, bound)?;
    let counts = irreducible_counts(&set, bound);
    let expected = (1..=bound as u32)
        .map(|n| corollary_count(d as u64, n))
        .collect();
    let envelope = enveloping_relations(&CommAlgebra::trivial_standard(d))?;
    let completion = complete(&envelope, bound)?;
    let completion_counts = irreducible_counts(&completion.relations, bound);
    Ok(TrivialEnvelopeReport {
        gsb,
        counts,
        expected,
        completion_counts,
        completion_added: completion.added.len(),
    })
}

/// Normal form of `xᵢ * xⱼ` computed inside the envelope.
#[derive(Clone, Debug)]
pub struct StarEntry {
    pub i: usize,
    pub j: usize,
    pub induced: MagmaPoly,
    pub expected: MagmaPoly,
}

#[derive(Clone, Debug)]
pub struct CollapseReport {
    pub bound: usize,
    pub counts: Vec<usize>,
    pub irreducible: Vec<Vec<NaWord>>,
    pub added: Vec<MagmaPoly>,
    pub star_table: Vec<StarEntry>,
    pub relations: RelationSet,
}

impl CollapseReport {
    /// Every induced star product equals the product in `A`.
    pub fn star_matches(&self) -> bool {
        self.star_table.iter().all(|e| e.induced == e.expected)
    }

    /// Only the generators survive, one per basis element.
    pub fn only_generators(&self) -> bool {
        self.counts.iter().skip(1).all(|&c| c == 0)
    }
}

/// Completes the envelope of `a` to `bound` and reports what survives.
pub fn collapse_check(a: &CommAlgebra, bound: usize) -> Result<CollapseReport> {
    let envelope = enveloping_relations(a)?;
    let completion = complete(&envelope, bound)?;
    let relations = completion.relations;
    let reducer = Reducer::new(&relations, bound.max(2));
    let mut star_table = Vec::new();
    for i in 0..a.dim() {
        for j in i..a.dim() {
            star_table.push(StarEntry {
                i,
                j,
                induced: reducer.normal_form(&anticommutator(i, j))?,
                expected: linear(a.product(i, j)),
            });
        }
    }
    let irreducible = crate::gsb::irreducible_words(&relations, bound);
    Ok(CollapseReport {
        bound,
        counts: irreducible.iter().map(Vec::len).collect(),
        irreducible,
        added: completion.added,
        star_table,
        relations,
    })
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub pairs_checked: usize,
    /// `(a, b, normal form of ab)` for every nonzero normal form.
    pub violations: Vec<(NaWord, NaWord, MagmaPoly)>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For left combs `a` of odd length `≤ m_max` and `b` of even length
/// `2..=k_max`, checks that `ab` reduces to zero modulo the five-family basis.
pub fn lemma_odd_even_check(d: usize, m_max: usize, k_max: usize) -> Result<LemmaReport> {
    if m_max % 2 == 0 || k_max % 2 == 1 || k_max < 2 {
        return Err(Error::Precondition(
            "m_max must be odd and k_max even and at least 2".into(),
        ));
    }
    let set = trivial_gsb(d);
    let mut pairs = Vec::new();
    for m in (1..=m_max).step_by(2) {
        for k in (2..=k_max).step_by(2) {
            for a in left_combs(d, m) {
                for b in left_combs(d, k) {
                    pairs.push((a.clone(), b));
                }
            }
        }
    }
    let reducer = Reducer::new(&set, m_max + k_max);
    let results: Vec<Result<Option<(NaWord, NaWord, MagmaPoly)>>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let ab = MagmaPoly::monomial(NaWord::node(a.clone(), b.clone()));
            let nf = reducer.normal_form(&ab)?;
            Ok((!nf.is_zero()).then(|| (a.clone(), b.clone(), nf)))
        })
        .collect();
    let mut violations = Vec::new();
    for r in results {
        if let Some(v) = r? {
            violations.push(v);
        }
    }
    Ok(LemmaReport {
        pairs_checked: pairs.len(),
        violations,
    })
}
