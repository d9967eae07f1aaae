//! Inclusion compositions, bounded Gröbner–Shirshov verification, and bounded
//! Shirshov completion.
//!
//! Two subtrees of one tree are either nested or disjoint, so inclusion
//! compositions are the only compositions to check.

use rayon::prelude::*;

use crate::error::Result;
use crate::gsb::reduce::Reducer;
use crate::gsb::relation::{Instance, RelationSet};
use crate::poly::{substitute, MagmaPoly};
use crate::word::{words_by_length, NaWord, TreePath};

/// `f − w|_{path = g}` where `w = f̄` and `ḡ` sits at `path`.
#[derive(Clone, Debug)]
pub struct Composition {
    pub ambiguity: NaWord,
    pub path: TreePath,
    pub f: Instance,
    pub g: Instance,
    pub value: MagmaPoly,
}

/// Inclusion compositions of two monic polynomials: one per occurrence of
/// `ḡ` inside `f̄`. The root occurrence is skipped only when `f == g`.
pub fn inclusion_compositions(
    f: &MagmaPoly,
    g: &MagmaPoly,
) -> Result<Vec<(NaWord, TreePath, MagmaPoly)>> {
    let (fw, f) = f.leading_and_monic()?;
    let (gw, g) = g.leading_and_monic()?;
    let mut out = Vec::new();
    for path in fw.occurrences(&gw) {
        if path.is_root() && f == g {
            continue;
        }
        let value = &f - &substitute(&fw, &path, &g)?;
        out.push((fw.clone(), path, value));
    }
    Ok(out)
}

/// Every composition with ambiguity `w`, ordered by path and then by the
/// schema indices of `f` and `g`.
pub fn compositions_at(relations: &RelationSet, w: &NaWord) -> Vec<Composition> {
    let fs = relations.instances_at(w);
    if fs.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (path, sub) in w.subtrees() {
        let gs = relations.instances_at(sub);
        for f in &fs {
            for g in &gs {
                if path.is_root() && f.same_as(g) {
                    continue;
                }
                let grafted = substitute(w, &path, &g.poly).expect("path from subtrees()");
                out.push(Composition {
                    ambiguity: w.clone(),
                    path: path.clone(),
                    f: f.clone(),
                    g: g.clone(),
                    value: &f.poly - &grafted,
                });
            }
        }
    }
    out
}

/// A composition whose normal form is not zero.
#[derive(Clone, Debug)]
pub struct CompositionFailure {
    pub composition: Composition,
    pub normal_form: MagmaPoly,
}

#[derive(Clone, Debug)]
pub struct GsbReport {
    pub ambiguities_checked: usize,
    pub compositions_checked: usize,
    pub failures: Vec<CompositionFailure>,
    pub instantiation_bound: usize,
}

impl GsbReport {
    pub fn verified(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every composition whose ambiguity has length at most `bound`.
///
/// Ambiguities are visited in order of (length, word); the check over
/// distinct ambiguities runs in parallel and is merged in that order.
pub fn verify_gsb(relations: &RelationSet, bound: usize) -> Result<GsbReport> {
    let words = words_by_length(relations.alphabet_size(), bound);
    let reducer = Reducer::new(relations, bound);
    let mut report = GsbReport {
        ambiguities_checked: 0,
        compositions_checked: 0,
        failures: Vec::new(),
        instantiation_bound: bound,
    };
    for level in &words {
        let results: Vec<Result<(usize, Vec<CompositionFailure>)>> = level
            .par_iter()
            .map(|w| {
                let comps = compositions_at(relations, w);
                let count = comps.len();
                let mut failures = Vec::new();
                for c in comps {
                    let nf = reducer.normal_form(&c.value)?;
                    if !nf.is_zero() {
                        failures.push(CompositionFailure {
                            composition: c,
                            normal_form: nf,
                        });
                    }
                }
                Ok((count, failures))
            })
            .collect();
        for r in results {
            let (count, failures) = r?;
            if count > 0 {
                report.ambiguities_checked += 1;
            }
            report.compositions_checked += count;
            report.failures.extend(failures);
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct Completion {
    pub relations: RelationSet,
    /// Monic relations appended by completion, in the order they were found.
    pub added: Vec<MagmaPoly>,
    pub passes: usize,
}

/// Bounded Shirshov completion.
///
/// Passes over all ambiguities of length at most `bound` in (length, word,
/// path, schema) order; each nonzero normal form of a composition is made
/// monic and appended immediately. Stops after a pass that adds nothing, so
/// the result passes [`verify_gsb`] at the same bound.
pub fn complete(relations: &RelationSet, bound: usize) -> Result<Completion> {
    let words: Vec<NaWord> = words_by_length(relations.alphabet_size(), bound)
        .into_iter()
        .flatten()
        .collect();
    let mut set = relations.clone();
    let mut added = Vec::new();
    let mut passes = 0;
    loop {
        passes += 1;
        let mut changed = false;
        for w in &words {
            for c in compositions_at(&set, w) {
                let nf = Reducer::new(&set, bound).normal_form(&c.value)?;
                if let Some(m) = nf.monic() {
                    set.push_explicit(&m)?;
                    added.push(m);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(Completion {
        relations: set,
        added,
        passes,
    })
}
