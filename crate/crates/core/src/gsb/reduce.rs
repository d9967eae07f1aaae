//! Normal forms modulo a relation set, with an optional rewrite trace.

use crate::error::{Error, Result};
use crate::gsb::relation::{Instance, RelationSet};
use crate::poly::{add_substituted, substitute, MagmaPoly};
use crate::rational::Rational;
use crate::word::{NaWord, TreePath};

/// Which monomial and which redex to rewrite next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Rewrite the largest reducible monomial at its outermost-leftmost redex.
    #[default]
    LeadingFirst,
    /// Rewrite the smallest reducible monomial at its innermost-leftmost redex.
    LeftmostFirst,
}

/// One step `c·w ↦ c·w − c·w|_{path = s}`.
#[derive(Clone, Debug)]
pub struct RewriteStep {
    pub coeff: Rational,
    pub word: NaWord,
    pub path: TreePath,
    pub relation: Instance,
}

impl RewriteStep {
    /// `coeff · word|_{path = relation}`.
    pub fn contribution(&self) -> MagmaPoly {
        substitute(&self.word, &self.path, &self.relation.poly)
            .expect("recorded paths are valid")
            .scale(&self.coeff)
    }
}

/// Sum of the contributions of a trace: equals `p − normal_form(p)`.
pub fn replay(trace: &[RewriteStep]) -> MagmaPoly {
    let mut out = MagmaPoly::zero();
    for step in trace {
        out += &step.contribution();
    }
    out
}

pub struct Reducer<'a> {
    relations: &'a RelationSet,
    bound: usize,
    strategy: Strategy,
}

impl<'a> Reducer<'a> {
    pub fn new(relations: &'a RelationSet, bound: usize) -> Self {
        Self {
            relations,
            bound,
            strategy: Strategy::LeadingFirst,
        }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn normal_form(&self, p: &MagmaPoly) -> Result<MagmaPoly> {
        self.run(p, None)
    }

    pub fn normal_form_traced(&self, p: &MagmaPoly) -> Result<(MagmaPoly, Vec<RewriteStep>)> {
        let mut trace = Vec::new();
        let nf = self.run(p, Some(&mut trace))?;
        Ok((nf, trace))
    }

    fn check_len(&self, w: &NaWord) -> Result<()> {
        if w.len() > self.bound {
            return Err(Error::BoundExceeded {
                len: w.len(),
                bound: self.bound,
            });
        }
        Ok(())
    }

    fn run(&self, p: &MagmaPoly, mut trace: Option<&mut Vec<RewriteStep>>) -> Result<MagmaPoly> {
        let mut work = p.clone();
        let mut done = MagmaPoly::zero();
        loop {
            let popped = match self.strategy {
                Strategy::LeadingFirst => work.pop_leading(),
                Strategy::LeftmostFirst => work.pop_smallest(),
            };
            let Some((w, c)) = popped else { break };
            self.check_len(&w)?;
            if done.contains(&w) {
                // already known to be irreducible
                done.add_term(w, c);
                continue;
            }
            let redex = match self.strategy {
                Strategy::LeadingFirst => self.relations.find_redex(&w),
                Strategy::LeftmostFirst => self.relations.find_innermost_redex(&w),
            };
            match redex {
                None => done.add_term(w, c),
                Some((path, inst)) => {
                    // c·w = c·w|_{s} − c·w|_{s − s̄}; keep the lower part
                    let mut tail = inst.poly.clone();
                    tail.add_term(inst.leading.clone(), -Rational::from_integer(1.into()));
                    add_substituted(&mut work, &(-&c), &w, &path, &tail);
                    if let Some(t) = trace.as_deref_mut() {
                        t.push(RewriteStep {
                            coeff: c,
                            word: w,
                            path,
                            relation: inst,
                        });
                    }
                }
            }
        }
        Ok(done)
    }
}

/// Normal form with the default (leading-first) strategy.
pub fn normal_form(p: &MagmaPoly, relations: &RelationSet, bound: usize) -> Result<MagmaPoly> {
    Reducer::new(relations, bound).normal_form(p)
}
