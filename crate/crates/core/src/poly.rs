//! Magmatic polynomials: rational combinations of non-associative words.

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::rational::Rational;
use crate::word::{Letter, NaWord, TreePath};

pub type MagmaPoly = LinComb<NaWord>;

impl LinComb<NaWord> {
    pub fn letter(l: Letter) -> Self {
        Self::monomial(NaWord::leaf(l))
    }

    /// Bilinear extension of `(u, v) ↦ (u v)`.
    pub fn magma_product(&self, other: &MagmaPoly) -> MagmaPoly {
        self.bilinear(other, |u, v| {
            MagmaPoly::monomial(NaWord::node(u.clone(), v.clone()))
        })
    }

    /// Leading monomial together with the polynomial divided by its leading
    /// coefficient.
    pub fn leading_and_monic(&self) -> Result<(NaWord, MagmaPoly)> {
        let (w, _) = self.leading().ok_or(Error::ZeroPolynomial)?;
        let w = w.clone();
        Ok((w, self.monic().expect("nonzero")))
    }

    pub fn max_word_len(&self) -> usize {
        self.keys().map(NaWord::len).max().unwrap_or(0)
    }
}

/// `w|_{path = replacement}`, extended linearly in `replacement`.
pub fn substitute(w: &NaWord, path: &TreePath, replacement: &MagmaPoly) -> Result<MagmaPoly> {
    if w.subtree(path).is_none() {
        return Err(Error::InvalidPath { path: path.clone() });
    }
    let mut out = MagmaPoly::zero();
    for (m, c) in replacement.iter() {
        out.add_term(w.replace(path, m)?, c.clone());
    }
    Ok(out)
}

/// Multiplies every term by a scalar and grafts it; shorthand used by the
/// reduction loop: `coeff · w|_{path = replacement}`.
pub(crate) fn add_substituted(
    acc: &mut MagmaPoly,
    coeff: &Rational,
    w: &NaWord,
    path: &TreePath,
    replacement: &MagmaPoly,
) {
    for (m, c) in replacement.iter() {
        let grafted = w.replace(path, m).expect("path checked by caller");
        acc.add_term(grafted, coeff * c);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::word::Step;

    const X: Letter = Letter(0);
    const Y: Letter = Letter(1);
    const Z: Letter = Letter(2);

    fn l(x: Letter) -> NaWord {
        NaWord::leaf(x)
    }
    fn n(a: NaWord, b: NaWord) -> NaWord {
        NaWord::node(a, b)
    }

    #[test]
    fn product_of_letters() {
        let p = MagmaPoly::letter(X).magma_product(&MagmaPoly::letter(Y));
        assert_eq!(p, MagmaPoly::monomial(n(l(X), l(Y))));
    }

    #[test]
    fn product_is_bilinear() {
        let sum = &MagmaPoly::letter(X) + &MagmaPoly::letter(Y);
        let p = sum.magma_product(&MagmaPoly::letter(X));
        let expected = MagmaPoly::from_terms([(int(1), n(l(X), l(X))), (int(1), n(l(Y), l(X)))]);
        assert_eq!(p, expected);
    }

    #[test]
    fn leading_of_symmetric_square() {
        let x = MagmaPoly::letter(X);
        let y = MagmaPoly::letter(Y);
        let p = &x.magma_product(&y) + &y.magma_product(&x);
        assert_eq!(p.leading_key(), Some(&n(l(X), l(Y))));
    }

    #[test]
    fn leading_and_monic_examples() {
        let p = MagmaPoly::from_terms([(int(3), n(l(X), l(Y))), (int(1), n(l(Y), l(X)))]);
        let (w, m) = p.leading_and_monic().unwrap();
        assert_eq!(w, n(l(X), l(Y)));
        assert_eq!(
            m,
            MagmaPoly::from_terms([(int(1), n(l(X), l(Y))), (rat(1, 3), n(l(Y), l(X)))])
        );
        let single = MagmaPoly::term(int(5), n(l(X), l(X)));
        assert_eq!(
            single.leading_and_monic().unwrap(),
            (n(l(X), l(X)), MagmaPoly::monomial(n(l(X), l(X))))
        );
        assert_eq!(MagmaPoly::zero().leading_and_monic(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn substitute_examples() {
        let w = n(l(X), n(l(Y), l(Z)));
        let right = TreePath(vec![Step::Right]);
        let repl = MagmaPoly::from_terms([(int(1), n(l(Y), l(Z))), (int(-1), n(l(Z), l(Y)))]);
        assert_eq!(
            substitute(&w, &right, &repl).unwrap(),
            MagmaPoly::from_terms([
                (int(1), n(l(X), n(l(Y), l(Z)))),
                (int(-1), n(l(X), n(l(Z), l(Y))))
            ])
        );
        assert_eq!(substitute(&w, &TreePath::root(), &repl).unwrap(), repl);
        let minus_zy = MagmaPoly::term(int(-1), n(l(Z), l(Y)));
        assert_eq!(
            substitute(&w, &right, &minus_zy).unwrap(),
            MagmaPoly::term(int(-1), n(l(X), n(l(Z), l(Y))))
        );
        let bad = TreePath(vec![Step::Left, Step::Right]);
        assert!(substitute(&w, &bad, &repl).is_err());
    }
}
