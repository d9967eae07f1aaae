//! Positively filtered commutative algebras and the graded relations `s_l`.

use num_traits::{One, Zero};

use crate::algebra::CommAlgebra;
use crate::compoly::{ComMonomial, ComPoly, GenSymbol};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{int, Rational};

/// A basis element `k` appearing in `xᵢ * xⱼ` below `level(i) + level(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// A commutative algebra with a level `≥ 1` attached to each basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct FilteredAlgebra {
    algebra: CommAlgebra,
    levels: Vec<u32>,
}

impl FilteredAlgebra {
    /// Pairs an algebra with levels without checking the product condition;
    /// see [`validate_filtration`].
    pub fn new(algebra: CommAlgebra, levels: Vec<u32>) -> Result<Self> {
        if levels.len() != algebra.dim() {
            return Err(Error::Filtration(format!(
                "{} levels for a basis of size {}",
                levels.len(),
                algebra.dim()
            )));
        }
        if levels.contains(&0) {
            return Err(Error::Filtration("levels must be positive".into()));
        }
        Ok(Self { algebra, levels })
    }

    /// [`FilteredAlgebra::new`] followed by [`validate_filtration`].
    pub fn validated(algebra: CommAlgebra, levels: Vec<u32>) -> Result<Self> {
        let a = Self::new(algebra, levels)?;
        if let Some(v) = validate_filtration(&a).first() {
            let n = a.algebra.names();
            return Err(Error::Filtration(format!(
                "{} appears in {} * {} below level {}",
                n[v.k],
                n[v.i],
                n[v.j],
                a.levels[v.i] + a.levels[v.j]
            )));
        }
        Ok(a)
    }

    pub fn algebra(&self) -> &CommAlgebra {
        &self.algebra
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> u32 {
        self.levels[i]
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    pub fn max_level(&self) -> u32 {
        self.levels.iter().copied().max().unwrap_or(1)
    }

    pub fn min_level(&self) -> u32 {
        self.levels.iter().copied().min().unwrap_or(1)
    }
}

/// Every `(i, j, k)` with `i ≤ j` where `x_k` occurs in `xᵢ * xⱼ` and
/// `level(k) < level(i) + level(j)`.
pub fn validate_filtration(a: &FilteredAlgebra) -> Vec<FiltrationViolation> {
    let mut out = Vec::new();
    for i in 0..a.dim() {
        for j in i..a.dim() {
            let need = a.levels[i] + a.levels[j];
            for (k, c) in a.algebra.product(i, j).iter().enumerate() {
                if !c.is_zero() && a.levels[k] < need {
                    out.push(FiltrationViolation { i, j, k });
                }
            }
        }
    }
    out
}

/// Row-reduced spanning sets of `A, A², A³, …` down to (excluding) zero.
fn power_chain(a: &CommAlgebra) -> Result<Vec<Vec<Vec<Rational>>>> {
    let d = a.dim();
    let mut chain = vec![linalg::rref(
        &(0..d).map(|i| a.unit_vector(i)).collect::<Vec<_>>(),
    )];
    loop {
        let last = chain.last().expect("nonempty");
        let mut products = Vec::new();
        for u in last {
            for j in 0..d {
                products.push(a.mul_vec(u, &a.unit_vector(j)));
            }
        }
        let next = linalg::rref(&products);
        if next.is_empty() {
            return Ok(chain);
        }
        if next.len() == last.len() {
            return Err(Error::NotNilpotent);
        }
        chain.push(next);
    }
}

fn is_unit(v: &[Rational]) -> Option<usize> {
    let mut nz = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
    match (nz.next(), nz.next()) {
        (Some((k, c)), None) if c.is_one() => Some(k),
        _ => None,
    }
}

/// The filtration `Fⁱ = Aⁱ` on a basis adapted to the chain of powers.
///
/// Starting from the deepest nonzero power, the row-reduced spanning rows
/// of each power are added whenever they are independent of those already
/// chosen; a row taken from `Aⁱ` gets level `i`. The new basis is ordered by
/// level and then by pivot column. A basis vector equal to an original basis
/// element keeps its name; others are named `f1, f2, …`.
pub fn standard_filtration(a: &CommAlgebra) -> Result<FilteredAlgebra> {
    let chain = power_chain(a)?;
    let mut chosen: Vec<(u32, Vec<Rational>)> = Vec::new();
    for (depth, rows) in chain.iter().enumerate().rev() {
        for row in rows {
            let mut trial: Vec<Vec<Rational>> = chosen.iter().map(|(_, r)| r.clone()).collect();
            trial.push(row.clone());
            if linalg::rank(&trial) == trial.len() {
                chosen.push((depth as u32 + 1, row.clone()));
            }
        }
    }
    let pivot = |v: &[Rational]| v.iter().position(|c| !c.is_zero()).unwrap_or(usize::MAX);
    chosen.sort_by(|(la, a), (lb, b)| la.cmp(lb).then(pivot(a).cmp(&pivot(b))));
    let mut names = Vec::with_capacity(chosen.len());
    let mut fresh = 0;
    for (_, row) in &chosen {
        match is_unit(row) {
            Some(k) => names.push(a.names()[k].clone()),
            None => loop {
                fresh += 1;
                let n = format!("f{fresh}");
                if !a.names().contains(&n) {
                    names.push(n);
                    break;
                }
            },
        }
    }
    let rows: Vec<Vec<Rational>> = chosen.iter().map(|(_, r)| r.clone()).collect();
    let levels = chosen.iter().map(|(l, _)| *l).collect();
    FilteredAlgebra::validated(a.change_basis(&rows, names)?, levels)
}

/// `x_i^{(k)}` for basis element `x` of `a` at weight `i`.
pub fn symbol(a: &FilteredAlgebra, x: usize, weight: u32) -> GenSymbol {
    GenSymbol::new(x, a.level(x), weight)
}

/// `Σ_{i+j=l} x_i y_j − Σ_z c_z z_l` before normalization, where `x*y = Σ c_z z`
/// and only `z` with `level(z) ≤ l` contribute. Ordered index pairs are
/// summed, so `x = y` doubles the off-diagonal terms.
pub fn hat_relation_raw(a: &FilteredAlgebra, x: usize, y: usize, l: u32) -> ComPoly {
    let (k, m) = (a.level(x), a.level(y));
    let mut out = ComPoly::zero();
    if l < k + m {
        return out;
    }
    for i in k..=l - m {
        let j = l - i;
        let mono = ComMonomial::new(vec![symbol(a, x, i), symbol(a, y, j)]);
        out.add_term(mono, int(1));
    }
    for (z, c) in a.algebra().product(x, y).iter().enumerate() {
        if !c.is_zero() && a.level(z) <= l {
            out.add_term(ComMonomial::var(symbol(a, z, l)), -c.clone());
        }
    }
    out
}

/// Monic `s_l(x, y)` for every basis pair `x ≤ y` and every `l` from
/// `level(x) + level(y)` up to `weight_bound`, ordered by `(x, y, l)`.
pub fn hat_relations(a: &FilteredAlgebra, weight_bound: u32) -> Vec<ComPoly> {
    let mut out = Vec::new();
    for x in 0..a.dim() {
        for y in x..a.dim() {
            for l in a.level(x) + a.level(y)..=weight_bound {
                if let Some(m) = hat_relation_raw(a, x, y, l).monic() {
                    out.push(m);
                }
            }
        }
    }
    out
}
