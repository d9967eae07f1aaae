//! Truncated power series `Σ_{n=1}^{N} fₙ tⁿ` with polynomial coefficients,
//! the Rota–Baxter operator `fₙ tⁿ ↦ (1/n) fₙ tⁿ`, and the products it induces.

use std::ops::{Add, Sub};

use crate::compoly::{com_reduce, ComPoly};
use crate::error::{Error, Result};
use crate::rational::{int, rat};

/// A series without constant term, truncated above `t^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    n: usize,
    /// `coeffs[k]` is the coefficient of `t^{k+1}`.
    coeffs: Vec<ComPoly>,
}

impl TruncSeries {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: vec![ComPoly::zero(); n],
        }
    }

    /// `c·t^degree`; zero when `degree > n`.
    pub fn monomial(n: usize, degree: usize, c: ComPoly) -> Self {
        assert!(degree >= 1, "series have no constant term");
        let mut s = Self::zero(n);
        if degree <= n {
            s.coeffs[degree - 1] = c;
        }
        s
    }

    /// Coefficients of `t, t², …`; entries beyond `n` are dropped.
    pub fn from_coeffs(n: usize, coeffs: impl IntoIterator<Item = ComPoly>) -> Self {
        let mut s = Self::zero(n);
        for (k, c) in coeffs.into_iter().take(n).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    /// Coefficient of `t^degree` for `1 ≤ degree ≤ n`.
    pub fn coeff(&self, degree: usize) -> &ComPoly {
        &self.coeffs[degree - 1]
    }

    pub fn coeffs(&self) -> &[ComPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ComPoly::is_zero)
    }

    pub fn scale(&self, c: &crate::rational::Rational) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Reduces every coefficient modulo `g`.
    pub fn reduce(&self, g: &[ComPoly]) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|p| com_reduce(p, g)).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&ComPoly, &ComPoly) -> ComPoly) -> Result<Self> {
        check_same(self, other)?;
        Ok(Self {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

fn check_same(a: &TruncSeries, b: &TruncSeries) -> Result<()> {
    if a.n != b.n {
        return Err(Error::TruncationMismatch(a.n, b.n));
    }
    Ok(())
}

impl Add for &TruncSeries {
    type Output = Result<TruncSeries>;

    fn add(self, rhs: &TruncSeries) -> Result<TruncSeries> {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncSeries {
    type Output = Result<TruncSeries>;

    fn sub(self, rhs: &TruncSeries) -> Result<TruncSeries> {
        self.zip(rhs, |a, b| a - b)
    }
}

/// `Σ fₙ tⁿ ↦ Σ (1/n) fₙ tⁿ`.
pub fn rb_apply(s: &TruncSeries) -> TruncSeries {
    TruncSeries {
        n: s.n,
        coeffs: s
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&rat(1, k as i64 + 1)))
            .collect(),
    }
}

/// Cauchy product through `t^N`, each coefficient reduced modulo `g`.
pub fn series_product(s: &TruncSeries, u: &TruncSeries, g: &[ComPoly]) -> Result<TruncSeries> {
    check_same(s, u)?;
    let n = s.n;
    let mut out = TruncSeries::zero(n);
    for i in 1..n {
        let a = s.coeff(i);
        if a.is_zero() {
            continue;
        }
        for j in 1..=n - i {
            let b = u.coeff(j);
            if !b.is_zero() {
                out.coeffs[i + j - 1] += &a.mul(b);
            }
        }
    }
    if !g.is_empty() {
        out = out.reduce(g);
    }
    Ok(out)
}

/// `a ≻ b = R(a)·b`.
pub fn succ(a: &TruncSeries, b: &TruncSeries, g: &[ComPoly]) -> Result<TruncSeries> {
    series_product(&rb_apply(a), b, g)
}

/// `R(s)·u + s·R(u)`.
pub fn star_b(s: &TruncSeries, u: &TruncSeries, g: &[ComPoly]) -> Result<TruncSeries> {
    &series_product(&rb_apply(s), u, g)? + &series_product(s, &rb_apply(u), g)?
}

/// `n · fₙ` at every degree: the inverse of [`rb_apply`].
pub fn rb_inverse(s: &TruncSeries) -> TruncSeries {
    TruncSeries {
        n: s.n,
        coeffs: s
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&int(k as i64 + 1)))
            .collect(),
    }
}
