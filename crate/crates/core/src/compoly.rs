//! Commutative polynomials over the graded generators `x_i^{(k)}`, with a
//! degree-first monomial order, reduction, and a bounded Buchberger
//! completion.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::rational::Rational;

/// The generator `x_i^{(k)}`: basis element `base` of level `k`, weight `i ≥ k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenSymbol {
    pub base: usize,
    pub level: u32,
    pub weight: u32,
}

impl GenSymbol {
    pub fn new(base: usize, level: u32, weight: u32) -> Self {
        assert!(
            level >= 1 && weight >= level,
            "x_{weight}^({level}) needs weight ≥ level ≥ 1"
        );
        Self {
            base,
            level,
            weight,
        }
    }

    /// `name_i^(k)`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a GenSymbol, &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let s = self.0;
                match self.1.get(s.base) {
                    Some(n) => write!(f, "{n}_{}^({})", s.weight, s.level),
                    None => write!(f, "#{}_{}^({})", s.base, s.weight, s.level),
                }
            }
        }
        D(self, names)
    }
}

impl Ord for GenSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight, self.level, self.base).cmp(&(other.weight, other.level, other.base))
    }
}

impl PartialOrd for GenSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A commutative monomial: a sorted multiset of generators. Empty is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ComMonomial(Vec<GenSymbol>);

impl ComMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn new(mut factors: Vec<GenSymbol>) -> Self {
        factors.sort();
        Self(factors)
    }

    pub fn var(s: GenSymbol) -> Self {
        Self(vec![s])
    }

    pub fn factors(&self) -> &[GenSymbol] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|s| s.weight).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &ComMonomial) -> ComMonomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        ComMonomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn divide(&self, other: &ComMonomial) -> Option<ComMonomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for s in &self.0 {
            if j < other.0.len() && other.0[j] == *s {
                j += 1;
            } else if j < other.0.len() && other.0[j] < *s {
                return None;
            } else {
                out.push(*s);
            }
        }
        (j == other.0.len()).then_some(ComMonomial(out))
    }

    pub fn divides(&self, other: &ComMonomial) -> bool {
        other.divide(self).is_some()
    }

    pub fn lcm(&self, other: &ComMonomial) -> ComMonomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        ComMonomial(out)
    }

    pub fn coprime(&self, other: &ComMonomial) -> bool {
        self.lcm(other).degree() == self.degree() + other.degree()
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a ComMonomial, &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_one() {
                    return write!(f, "1");
                }
                for (i, s) in self.0 .0.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", s.display(self.1))?;
                }
                Ok(())
            }
        }
        D(self, names)
    }
}

/// Factor count, then total weight, then the sorted factor sequences
/// lexicographically.
pub fn com_compare(m1: &ComMonomial, m2: &ComMonomial) -> Ordering {
    m1.degree()
        .cmp(&m2.degree())
        .then_with(|| m1.weight().cmp(&m2.weight()))
        .then_with(|| m1.0.cmp(&m2.0))
}

impl Ord for ComMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        com_compare(self, other)
    }
}

impl PartialOrd for ComMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type ComPoly = LinComb<ComMonomial>;

impl LinComb<ComMonomial> {
    pub fn var(s: GenSymbol) -> Self {
        Self::monomial(ComMonomial::var(s))
    }

    pub fn mul(&self, other: &ComPoly) -> ComPoly {
        self.bilinear(other, |a, b| ComPoly::monomial(a.mul(b)))
    }

    pub fn mul_monomial(&self, c: &Rational, m: &ComMonomial) -> ComPoly {
        self.iter()
            .map(|(k, v)| (v * c, k.mul(m)))
            .collect()
    }

    /// Weights occurring in the terms, ascending and deduplicated.
    pub fn weights(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self.keys().map(ComMonomial::weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weights().len() <= 1
    }
}

/// One step `p ↦ p − c·m·g`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComStep {
    pub coeff: Rational,
    pub multiplier: ComMonomial,
    pub relation: usize,
}

fn reduce_impl(p: &ComPoly, g: &[ComPoly], mut trace: Option<&mut Vec<ComStep>>) -> ComPoly {
    let leads: Vec<(&ComMonomial, &Rational)> = g
        .iter()
        .map(|r| r.leading().expect("relations are nonzero"))
        .collect();
    let mut work = p.clone();
    let mut done = ComPoly::zero();
    while let Some((m, c)) = work.pop_leading() {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(idx, (lead, _))| m.divide(lead).map(|q| (idx, q)));
        match hit {
            None => done.add_term(m, c),
            Some((idx, q)) => {
                let coeff = &c / leads[idx].1;
                for (k, v) in g[idx].iter().skip(1) {
                    work.add_term(k.mul(&q), -(v * &coeff));
                }
                if let Some(t) = trace.as_deref_mut() {
                    t.push(ComStep {
                        coeff,
                        multiplier: q,
                        relation: idx,
                    });
                }
            }
        }
    }
    done
}

/// Fully reduces `p` so that no term is divisible by a leading monomial of `g`.
pub fn com_reduce(p: &ComPoly, g: &[ComPoly]) -> ComPoly {
    reduce_impl(p, g, None)
}

/// [`com_reduce`] with the steps taken; `p − Σ c·m·g[i]` is the result.
pub fn com_reduce_traced(p: &ComPoly, g: &[ComPoly]) -> (ComPoly, Vec<ComStep>) {
    let mut trace = Vec::new();
    let r = reduce_impl(p, g, Some(&mut trace));
    (r, trace)
}

/// `(L/f̄)·f − (L/ḡ)·g` for monic `f`, `g` with `L = lcm(f̄, ḡ)`.
pub fn s_polynomial(f: &ComPoly, g: &ComPoly) -> Result<ComPoly> {
    let (f, g) = match (f.monic(), g.monic()) {
        (Some(f), Some(g)) => (f, g),
        _ => return Err(Error::ZeroPolynomial),
    };
    let fl = f.leading_key().expect("nonzero");
    let gl = g.leading_key().expect("nonzero");
    let l = fl.lcm(gl);
    let one = crate::rational::one();
    let a = f.mul_monomial(&one, &l.divide(fl).expect("lcm"));
    let b = g.mul_monomial(&one, &l.divide(gl).expect("lcm"));
    Ok(&a - &b)
}

#[derive(Clone, Debug, Default)]
pub struct BuchbergerReport {
    pub weight_bound: u32,
    pub factor_bound: usize,
    pub rounds: usize,
    pub pairs_reduced: usize,
    pub pairs_coprime: usize,
    pub pairs_beyond_bound: usize,
    /// Leading monomials of polynomials added by completion, in order.
    pub new_leading: Vec<ComMonomial>,
    /// Linear leading monomials anywhere in the final basis.
    pub linear_leading: Vec<ComMonomial>,
}

impl BuchbergerReport {
    pub fn injective(&self) -> bool {
        self.linear_leading.is_empty()
    }
}

/// Buchberger completion restricted to S-pairs whose lcm has weight at most
/// `weight_bound` and at most `factor_bound` factors.
///
/// Pairs with coprime leading monomials are skipped. Each round reduces the
/// pending S-polynomials in parallel against the current basis, then adds
/// the nonzero remainders in pair order, re-reducing each against what was
/// added before it.
pub fn buchberger_bounded(
    g: &[ComPoly],
    weight_bound: u32,
    factor_bound: usize,
) -> (Vec<ComPoly>, BuchbergerReport) {
    let mut basis: Vec<ComPoly> = Vec::new();
    for p in g {
        if let Some(m) = p.monic() {
            if !basis.contains(&m) {
                basis.push(m);
            }
        }
    }
    let mut report = BuchbergerReport {
        weight_bound,
        factor_bound,
        ..Default::default()
    };
    let mut pending: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while !pending.is_empty() {
        report.rounds += 1;
        let mut live = Vec::new();
        for (i, j) in pending.drain(..) {
            let (fi, fj) = (basis[i].leading_key().unwrap(), basis[j].leading_key().unwrap());
            let l = fi.lcm(fj);
            if l.weight() > weight_bound || l.degree() > factor_bound {
                report.pairs_beyond_bound += 1;
            } else if fi.coprime(fj) {
                report.pairs_coprime += 1;
            } else {
                live.push((l, i, j));
            }
        }
        live.sort();
        report.pairs_reduced += live.len();
        let remainders: Vec<ComPoly> = live
            .par_iter()
            .map(|(_, i, j)| {
                let s = s_polynomial(&basis[*i], &basis[*j]).expect("basis is nonzero");
                com_reduce(&s, &basis)
            })
            .collect();
        for r in remainders {
            let r = com_reduce(&r, &basis);
            if let Some(m) = r.monic() {
                let idx = basis.len();
                report.new_leading.push(m.leading_key().unwrap().clone());
                basis.push(m);
                pending.extend((0..idx).map(|i| (i, idx)));
            }
        }
    }
    report.linear_leading = basis
        .iter()
        .filter_map(|p| p.leading_key())
        .filter(|m| m.degree() == 1)
        .cloned()
        .collect();
    (basis, report)
}
