//! The map `φ(x) = Σ_{i≥k} i·x_i^{(k)} tⁱ` into truncated series over the
//! presented algebra, and a bounded verification that it is an injective
//! homomorphism for the anti-commutator of `a ≻ b = R(a)b`.

use rayon::prelude::*;

use crate::compoly::{buchberger_bounded, com_reduce, BuchbergerReport, ComPoly};
use crate::error::{Error, Result};
use crate::filtered::{hat_relation_raw, hat_relations, symbol, validate_filtration, FilteredAlgebra};
use crate::rational::int;
use crate::series::{star_b, succ, TruncSeries};

/// `φ(x)` for basis element `x`, truncated at `t^n`.
pub fn phi(a: &FilteredAlgebra, x: usize, n: usize) -> Result<TruncSeries> {
    let k = a.level(x);
    if n < k as usize {
        return Err(Error::TruncationBelowLevel { n, level: k });
    }
    Ok(TruncSeries::from_coeffs(
        n,
        (1..=n as u32).map(|i| {
            if i < k {
                ComPoly::zero()
            } else {
                ComPoly::term(int(i as i64), crate::compoly::ComMonomial::var(symbol(a, x, i)))
            }
        }),
    ))
}

/// `φ(v)` for a vector of coordinates in the basis of `a`.
pub fn phi_vec(a: &FilteredAlgebra, v: &[crate::rational::Rational], n: usize) -> Result<TruncSeries> {
    let mut out = TruncSeries::zero(n);
    for (z, c) in v.iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            out = (&out + &phi(a, z, n)?.scale(c))?;
        }
    }
    Ok(out)
}

/// A nonzero coefficient of `star_B(φx, φy) − φ(x*y)` after reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueFailure {
    pub x: usize,
    pub y: usize,
    pub degree: usize,
    pub residue: ComPoly,
}

#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub truncation: usize,
    pub relations: usize,
    pub pairs_checked: usize,
    pub homomorphism_failures: Vec<ResidueFailure>,
    /// `(x, y, l)` where the unreduced residue at `t^l` is not `l·s_l(x, y)`.
    pub residue_formula_mismatches: Vec<(usize, usize, usize)>,
    pub zinbiel_triples_checked: usize,
    pub zinbiel_failures: Vec<(usize, usize, usize)>,
    pub buchberger: BuchbergerReport,
    /// Weight bound up to which no linear form lies in the ideal.
    pub injectivity_certified_to: Option<u32>,
    pub notes: Vec<String>,
}

impl EmbeddingReport {
    pub fn verified(&self) -> bool {
        self.homomorphism_failures.is_empty()
            && self.residue_formula_mismatches.is_empty()
            && self.zinbiel_failures.is_empty()
            && self.injectivity_certified_to.is_some()
    }
}

struct PairOutcome {
    failures: Vec<ResidueFailure>,
    mismatches: Vec<(usize, usize, usize)>,
}

fn check_pair(
    a: &FilteredAlgebra,
    images: &[TruncSeries],
    relations: &[ComPoly],
    x: usize,
    y: usize,
    n: usize,
) -> Result<PairOutcome> {
    let lhs = star_b(&images[x], &images[y], &[])?;
    let rhs = phi_vec(a, a.algebra().product(x, y), n)?;
    let residue = (&lhs - &rhs)?;
    let mut out = PairOutcome {
        failures: Vec::new(),
        mismatches: Vec::new(),
    };
    for l in 1..=n {
        let r = residue.coeff(l);
        let formula = hat_relation_raw(a, x, y, l as u32).scale(&int(l as i64));
        if r != &formula {
            out.mismatches.push((x, y, l));
        }
        let reduced = com_reduce(r, relations);
        if !reduced.is_zero() {
            out.failures.push(ResidueFailure {
                x,
                y,
                degree: l,
                residue: reduced,
            });
        }
    }
    Ok(out)
}

/// Bounded check of the embedding at truncation `n`.
///
/// Requires a valid filtration, `n ≥ max level` so every `φ(x)` is visible,
/// and `n ≥ 2·min level` so at least one product degree is. Checks, for all
/// basis pairs, that the residue at each `t^l` equals `l·s_l(x, y)` and
/// reduces to zero by the relations `s_l`; checks the Zinbiel identity for
/// `≻` on all basis triples of images; and completes the relations with
/// bounded Buchberger at weight `n` looking for linear leading monomials.
pub fn verify_embedding(a: &FilteredAlgebra, n: usize) -> Result<EmbeddingReport> {
    if let Some(v) = validate_filtration(a).first() {
        let names = a.names();
        return Err(Error::Filtration(format!(
            "{} appears in {} * {} below level {}",
            names[v.k],
            names[v.i],
            names[v.j],
            a.level(v.i) + a.level(v.j)
        )));
    }
    if n < a.max_level() as usize {
        return Err(Error::TruncationBelowLevel {
            n,
            level: a.max_level(),
        });
    }
    if n < 2 * a.min_level() as usize {
        return Err(Error::Precondition(format!(
            "truncation {n} shows no product degree (need at least {})",
            2 * a.min_level()
        )));
    }
    let relations = hat_relations(a, n as u32);
    let images: Vec<TruncSeries> = (0..a.dim())
        .map(|x| phi(a, x, n))
        .collect::<Result<_>>()?;

    let pairs: Vec<(usize, usize)> = (0..a.dim())
        .flat_map(|x| (x..a.dim()).map(move |y| (x, y)))
        .collect();
    let outcomes: Vec<Result<PairOutcome>> = pairs
        .par_iter()
        .map(|&(x, y)| check_pair(a, &images, &relations, x, y, n))
        .collect();
    let mut homomorphism_failures = Vec::new();
    let mut residue_formula_mismatches = Vec::new();
    for o in outcomes {
        let o = o?;
        homomorphism_failures.extend(o.failures);
        residue_formula_mismatches.extend(o.mismatches);
    }

    let triples: Vec<(usize, usize, usize)> = (0..a.dim())
        .flat_map(|i| (0..a.dim()).flat_map(move |j| (0..a.dim()).map(move |k| (i, j, k))))
        .collect();
    let zinbiel: Vec<Result<Option<(usize, usize, usize)>>> = triples
        .par_iter()
        .map(|&(i, j, k)| {
            let (p, q, r) = (&images[i], &images[j], &images[k]);
            let lhs = succ(p, &succ(q, r, &[])?, &[])?;
            let rhs = (&succ(&succ(p, q, &[])?, r, &[])? + &succ(&succ(q, p, &[])?, r, &[])?)?;
            Ok((lhs != rhs).then_some((i, j, k)))
        })
        .collect();
    let mut zinbiel_failures = Vec::new();
    for z in zinbiel {
        zinbiel_failures.extend(z?);
    }

    let (_, buchberger) = buchberger_bounded(&relations, n as u32, n);
    let injectivity_certified_to = buchberger.injective().then_some(n as u32);
    let mut notes = Vec::new();
    if !buchberger.injective() {
        notes.push(format!(
            "{} linear leading monomial(s) after bounded completion",
            buchberger.linear_leading.len()
        ));
    }
    Ok(EmbeddingReport {
        truncation: n,
        relations: relations.len(),
        pairs_checked: pairs.len(),
        homomorphism_failures,
        residue_formula_mismatches,
        zinbiel_triples_checked: triples.len(),
        zinbiel_failures,
        buchberger,
        injectivity_certified_to,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CommAlgebra;
    use crate::compoly::ComMonomial;
    use crate::filtered::standard_filtration;

    #[test]
    fn phi_examples() {
        let a = standard_filtration(&CommAlgebra::truncated_polynomial(2)).unwrap();
        let x = phi(&a, 0, 3).unwrap();
        for i in 1..=3u32 {
            assert_eq!(
                x.coeff(i as usize),
                &ComPoly::term(int(i as i64), ComMonomial::var(symbol(&a, 0, i)))
            );
        }
        let y = phi(&a, 1, 3).unwrap();
        assert!(y.coeff(1).is_zero());
        assert_eq!(y.coeff(2), &ComPoly::term(int(2), ComMonomial::var(symbol(&a, 1, 2))));
        let edge = phi(&a, 1, 2).unwrap();
        assert_eq!(edge.coeffs().iter().filter(|c| !c.is_zero()).count(), 1);
        assert_eq!(
            phi(&a, 1, 1),
            Err(Error::TruncationBelowLevel { n: 1, level: 2 })
        );
    }

    #[test]
    fn trivial_one_dimensional() {
        let a = standard_filtration(&CommAlgebra::trivial_standard(1)).unwrap();
        let r = verify_embedding(&a, 4).unwrap();
        assert!(r.verified(), "{r:?}");
        assert_eq!(r.injectivity_certified_to, Some(4));
    }

    #[test]
    fn truncated_cubic() {
        let a = standard_filtration(&CommAlgebra::truncated_polynomial(2)).unwrap();
        let r = verify_embedding(&a, 4).unwrap();
        assert!(r.verified(), "{r:?}");
        let a3 = standard_filtration(&CommAlgebra::truncated_polynomial(3)).unwrap();
        assert!(verify_embedding(&a3, 4).unwrap().verified());
    }

    #[test]
    fn preconditions() {
        let a = standard_filtration(&CommAlgebra::truncated_polynomial(3)).unwrap();
        assert!(verify_embedding(&a, 2).is_err());
        let t = standard_filtration(&CommAlgebra::trivial_standard(1)).unwrap();
        assert!(verify_embedding(&t, 1).is_err());
        let forced = FilteredAlgebra::new(CommAlgebra::idempotent(), vec![1]).unwrap();
        assert!(matches!(verify_embedding(&forced, 4), Err(Error::Filtration(_))));
    }
}
