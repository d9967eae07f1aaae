//! The free Zinbiel algebra on associative words.
//!
//! The product is `u · (v′z) = Σ shuffle(u, v′)·z`; the anti-commutator
//! `a * b = ab + ba` is the shuffle product. Only `a ≻ b = ab` is stored; the
//! other half of the splitting is `a ≺ b = b ≻ a`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gsb::{normal_form, Family, RelationSchema, RelationSet};
use crate::lincomb::LinComb;
use crate::poly::MagmaPoly;
use crate::rational::{one, Rational};
use crate::word::{AWord, Letter};

pub type ZinbElement = LinComb<AWord>;

impl LinComb<AWord> {
    pub fn word(w: AWord) -> Self {
        Self::monomial(w)
    }

    pub fn zinbiel_product(&self, other: &ZinbElement) -> ZinbElement {
        zinbiel_product(self, other)
    }

    pub fn star(&self, other: &ZinbElement) -> ZinbElement {
        star(self, other)
    }

    /// The same element as a polynomial on left combs.
    pub fn to_magma(&self) -> MagmaPoly {
        self.map_keys(AWord::to_left_comb)
    }
}

fn shuffle_letters(u: &[Letter], v: &[Letter], prefix: &mut Vec<Letter>, out: &mut ZinbElement) {
    match (u.split_first(), v.split_first()) {
        (None, None) => out.add_term(AWord::new(prefix.clone()).expect("nonempty"), one()),
        (Some((a, rest)), None) | (None, Some((a, rest))) => {
            let len = prefix.len();
            prefix.push(*a);
            prefix.extend_from_slice(rest);
            out.add_term(AWord::new(prefix.clone()).expect("nonempty"), one());
            prefix.truncate(len);
        }
        (Some((a, u_rest)), Some((b, v_rest))) => {
            prefix.push(*a);
            shuffle_letters(u_rest, v, prefix, out);
            prefix.pop();
            prefix.push(*b);
            shuffle_letters(u, v_rest, prefix, out);
            prefix.pop();
        }
    }
}

/// Sum over all interleavings of `u` and `v` that keep each word's order.
pub fn shuffle(u: &AWord, v: &AWord) -> ZinbElement {
    let mut out = ZinbElement::zero();
    shuffle_letters(u.letters(), v.letters(), &mut Vec::with_capacity(u.len() + v.len()), &mut out);
    out
}

fn word_product(u: &AWord, v: &AWord) -> ZinbElement {
    let (last, init) = v.letters().split_last().expect("nonempty");
    let mut shuffled = ZinbElement::zero();
    shuffle_letters(u.letters(), init, &mut Vec::with_capacity(u.len() + v.len()), &mut shuffled);
    shuffled.map_keys(|w| {
        let mut letters = w.letters().to_vec();
        letters.push(*last);
        AWord::new(letters).expect("nonempty")
    })
}

pub fn zinbiel_product(f: &ZinbElement, g: &ZinbElement) -> ZinbElement {
    f.bilinear(g, word_product)
}

/// The anti-commutator `fg + gf`.
pub fn star(f: &ZinbElement, g: &ZinbElement) -> ZinbElement {
    &zinbiel_product(f, g) + &zinbiel_product(g, f)
}

/// Rewrites `p` to left combs modulo the Zinbiel family and reads each comb's
/// leaves as an associative word.
pub fn to_left_comb(p: &MagmaPoly, alphabet_size: usize) -> Result<ZinbElement> {
    let set = RelationSet::with_schemas(alphabet_size, [RelationSchema::Family(Family::Zinbiel)]);
    let nf = normal_form(p, &set, p.max_word_len().max(1))?;
    let mut out = ZinbElement::zero();
    for (w, c) in nf.iter() {
        debug_assert!(w.is_left_comb());
        out.add_term(AWord::new(w.leaves())?, c.clone());
    }
    Ok(out)
}

/// A Perm algebra on `e₀..e_{d−1}` given by its structure table.
#[derive(Clone, Debug, PartialEq)]
pub struct PermAlgebra {
    dim: usize,
    /// `table[i][j]` holds the coordinates of `eᵢeⱼ`.
    table: Vec<Vec<Vec<Rational>>>,
}

impl PermAlgebra {
    /// The model `eᵢeⱼ = eⱼ`.
    pub fn standard(dim: usize) -> Self {
        Self::from_fn(dim, |_, j| j)
    }

    /// `eᵢeⱼ = e_{f(i, j)}`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let table = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| unit(dim, f(i, j)))
                    .collect()
            })
            .collect();
        Self { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i][j]
    }

    fn mul_vec(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let c = ai * bj;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    out[k] += &c * t;
                }
            }
        }
        out
    }

    /// Checks associativity and left commutativity on all basis triples.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (ei, ej, ek) = (unit(d, i), unit(d, j), unit(d, k));
                    let left_assoc = self.mul_vec(&self.mul_vec(&ei, &ej), &ek);
                    let right_assoc = self.mul_vec(&ei, &self.mul_vec(&ej, &ek));
                    let swapped = self.mul_vec(&ej, &self.mul_vec(&ei, &ek));
                    if left_assoc != right_assoc || right_assoc != swapped {
                        return Err(Error::PermIdentity(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = one();
    v
}

/// An element of `P ⊗ Z`: pairs (Perm basis index, word).
pub type TensorElement = LinComb<(usize, AWord)>;

/// `(p⊗a)(q⊗b) = pq⊗(a≻b) + qp⊗(a≺b)` with `a≺b = b≻a`.
pub fn tensor_product(p: &PermAlgebra, x: &TensorElement, y: &TensorElement) -> TensorElement {
    x.bilinear(y, |(i, a), (j, b)| {
        let mut out = TensorElement::zero();
        let succ = word_product(a, b);
        let prec = word_product(b, a);
        for (k, c) in p.mul_basis(*i, *j).iter().enumerate() {
            for (w, cw) in succ.iter() {
                out.add_term((k, w.clone()), c * cw);
            }
        }
        for (k, c) in p.mul_basis(*j, *i).iter().enumerate() {
            for (w, cw) in prec.iter() {
                out.add_term((k, w.clone()), c * cw);
            }
        }
        out
    })
}

#[derive(Clone, Debug, Default)]
pub struct PermTensorReport {
    pub triples_checked: usize,
    /// Indices of sample triples where `xy ≠ yx`.
    pub commutativity_violations: Vec<usize>,
    /// Indices of sample triples where `(xy)z ≠ x(yz)`.
    pub associativity_violations: Vec<usize>,
}

impl PermTensorReport {
    pub fn passed(&self) -> bool {
        self.commutativity_violations.is_empty() && self.associativity_violations.is_empty()
    }
}

/// Validates `p`, then checks that `P ⊗ Z` is commutative and associative on
/// every sampled triple.
pub fn perm_tensor_check(
    p: &PermAlgebra,
    samples: &[(TensorElement, TensorElement, TensorElement)],
) -> Result<PermTensorReport> {
    p.validate()?;
    let mut report = PermTensorReport::default();
    for (idx, (x, y, z)) in samples.iter().enumerate() {
        report.triples_checked += 1;
        let xy = tensor_product(p, x, y);
        if xy != tensor_product(p, y, x) {
            report.commutativity_violations.push(idx);
        }
        let left = tensor_product(p, &xy, z);
        let right = tensor_product(p, x, &tensor_product(p, y, z));
        if left != right {
            report.associativity_violations.push(idx);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::word::NaWord;

    const X: Letter = Letter(0);
    const Y: Letter = Letter(1);
    const Z: Letter = Letter(2);

    fn aw(ls: &[Letter]) -> AWord {
        AWord::new(ls.to_vec()).unwrap()
    }
    fn el(ls: &[Letter]) -> ZinbElement {
        ZinbElement::word(aw(ls))
    }
    fn sum(ws: &[&[Letter]]) -> ZinbElement {
        ws.iter().map(|w| (int(1), aw(w))).collect()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(&aw(&[X]), &aw(&[Y])), sum(&[&[X, Y], &[Y, X]]));
        assert_eq!(
            shuffle(&aw(&[X]), &aw(&[Y, Z])),
            sum(&[&[X, Y, Z], &[Y, X, Z], &[Y, Z, X]])
        );
        assert_eq!(shuffle(&aw(&[X]), &aw(&[X])), ZinbElement::term(int(2), aw(&[X, X])));
    }

    #[test]
    fn product_examples() {
        assert_eq!(el(&[X]).zinbiel_product(&el(&[Y])), el(&[X, Y]));
        assert_eq!(
            el(&[X]).zinbiel_product(&el(&[Y, Z])),
            sum(&[&[X, Y, Z], &[Y, X, Z]])
        );
        assert_eq!(el(&[X, Y]).zinbiel_product(&el(&[Z])), el(&[X, Y, Z]));
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&el(&[X]), &el(&[Y])), sum(&[&[X, Y], &[Y, X]]));
        assert_eq!(
            star(&el(&[X]), &el(&[Y, Z])),
            shuffle(&aw(&[X]), &aw(&[Y, Z]))
        );
    }

    #[test]
    fn left_comb_examples() {
        let x = MagmaPoly::letter(X);
        let y = MagmaPoly::letter(Y);
        let z = MagmaPoly::letter(Z);
        let right_nested = x.magma_product(&y.magma_product(&z));
        assert_eq!(
            to_left_comb(&right_nested, 3).unwrap(),
            sum(&[&[X, Y, Z], &[Y, X, Z]])
        );
        let comb = MagmaPoly::monomial(NaWord::left_comb(&[X, Y, Z]).unwrap());
        assert_eq!(to_left_comb(&comb, 3).unwrap(), el(&[X, Y, Z]));
    }

    #[test]
    fn perm_validation() {
        assert!(PermAlgebra::standard(2).validate().is_ok());
        let corrupted = PermAlgebra::from_fn(2, |i, _| i);
        assert!(matches!(corrupted.validate(), Err(Error::PermIdentity(..))));
    }

    #[test]
    fn empty_samples_pass() {
        let r = perm_tensor_check(&PermAlgebra::standard(2), &[]).unwrap();
        assert!(r.passed());
        let zero = TensorElement::zero();
        let r = perm_tensor_check(
            &PermAlgebra::standard(2),
            &[(zero.clone(), zero.clone(), zero)],
        )
        .unwrap();
        assert!(r.passed());
    }
}
