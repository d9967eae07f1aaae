//! Finite-dimensional commutative algebras given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{int, one, Rational};

/// A commutative algebra with an ordered basis `x₀ < x₁ < …`.
///
/// Only products `xᵢ * xⱼ` with `i ≤ j` are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct CommAlgebra {
    names: Vec<String>,
    table: Vec<Vec<Rational>>,
}

impl CommAlgebra {
    /// The algebra with zero multiplication.
    pub fn trivial<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Algebra("empty basis".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Algebra(format!("duplicate basis element {n:?}")));
            }
        }
        let d = names.len();
        Ok(Self {
            table: vec![vec![Rational::zero(); d]; d * (d + 1) / 2],
            names,
        })
    }

    /// Trivial algebra on `x < y < z` (or `x1 < x2 < …`).
    pub fn trivial_standard(dim: usize) -> Self {
        Self::trivial(crate::word::Alphabet::standard(dim).names().to_vec()).expect("valid names")
    }

    /// `t𝕜[t]/(t^{n+1})` on `x1 = t, …, xn = tⁿ`.
    pub fn truncated_polynomial(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut a = Self::trivial(names).expect("valid names");
        for i in 0..n {
            for j in i..n {
                if i + j + 2 <= n {
                    let mut v = vec![Rational::zero(); n];
                    v[i + j + 1] = one();
                    a.set_product(i, j, v).expect("in range");
                }
            }
        }
        a
    }

    /// One-dimensional `⟨e⟩` with `e * e = e`.
    pub fn idempotent() -> Self {
        let mut a = Self::trivial(["x"]).expect("valid names");
        a.set_product(0, 0, vec![one()]).expect("in range");
        a
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let d = self.dim();
        i * d - i * (i + 1) / 2 + j
    }

    pub fn set_product(&mut self, i: usize, j: usize, coords: Vec<Rational>) -> Result<()> {
        let d = self.dim();
        if i >= d || j >= d || coords.len() != d {
            return Err(Error::Algebra(format!(
                "product ({i}, {j}) out of range for dimension {d}"
            )));
        }
        let s = self.slot(i, j);
        self.table[s] = coords;
        Ok(())
    }

    /// Coordinates of `xᵢ * xⱼ`.
    pub fn product(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[self.slot(i, j)]
    }

    pub fn mul_vec(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (k, t) in self.product(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &c * t;
                    }
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = one();
        v
    }

    pub fn is_zero_product(&self) -> bool {
        self.table.iter().flatten().all(Zero::is_zero)
    }

    /// `(xᵢxⱼ)xₖ = xᵢ(xⱼxₖ)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.product(i, j).to_vec();
                for k in 0..d {
                    let left = self.mul_vec(&ij, &self.unit_vector(k));
                    let right = self.mul_vec(&self.unit_vector(i), self.product(j, k));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Re-expresses the algebra in a new basis; `rows[i]` are the coordinates
    /// of the new `i`-th basis vector in the current basis.
    pub fn change_basis(&self, rows: &[Vec<Rational>], names: Vec<String>) -> Result<Self> {
        let d = self.dim();
        if rows.len() != d || names.len() != d || rows.iter().any(|r| r.len() != d) {
            return Err(Error::Algebra("basis change must be square".into()));
        }
        if linalg::rank(rows) != d {
            return Err(Error::Algebra("basis change is singular".into()));
        }
        let mut out = Self::trivial(names)?;
        for i in 0..d {
            for j in i..d {
                let prod = self.mul_vec(&rows[i], &rows[j]);
                let coords = linalg::coordinates(rows, &prod).expect("rows span the space");
                out.set_product(i, j, coords)?;
            }
        }
        Ok(out)
    }

    /// Scalar helper for tests and builders: `Σ cₖ xₖ` from integer pairs.
    pub fn combination(&self, terms: &[(usize, i64)]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for &(k, c) in terms {
            v[k] += int(c);
        }
        v
    }
}
