//! Relation schemas: explicit monic polynomials and lazily instantiated
//! parametric families.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::MagmaPoly;
use crate::rational::one;
use crate::word::{Letter, NaWord, TreePath};

/// Produces the monic family member whose leading monomial is the given
/// word, if there is one.
pub type Matcher = Arc<dyn Fn(&NaWord) -> Option<MagmaPoly> + Send + Sync>;

/// A parametric family of monic relations, indexed by leading monomial.
#[derive(Clone)]
pub enum Family {
    /// `a(bc) − (ab)c − (ba)c` for all words `a, b, c`.
    Zinbiel,
    /// `(ax)y + (ay)x` for letters `x < y` and left combs `a` of even length.
    EvenCombAnticommute,
    /// `(ax)x` for letters `x` and left combs `a` of even length.
    EvenCombSquare,
    /// A user-supplied matcher. It must return a polynomial whose leading
    /// monomial is the queried word; anything else is ignored.
    Custom { name: String, matcher: Matcher },
}

impl Family {
    pub fn name(&self) -> &str {
        match self {
            Family::Zinbiel => "zinbiel",
            Family::EvenCombAnticommute => "even-comb-anticommute",
            Family::EvenCombSquare => "even-comb-square",
            Family::Custom { name, .. } => name,
        }
    }

    /// The family member with leading monomial `w`.
    pub fn instance_at(&self, w: &NaWord) -> Option<MagmaPoly> {
        match self {
            Family::Zinbiel => {
                let (a, bc) = w.split()?;
                let (b, c) = bc.split()?;
                let ab = NaWord::node(a.clone(), b.clone());
                let ba = NaWord::node(b.clone(), a.clone());
                let mut p = MagmaPoly::monomial(w.clone());
                p.add_term(NaWord::node(ab, c.clone()), -one());
                p.add_term(NaWord::node(ba, c.clone()), -one());
                Some(p)
            }
            Family::EvenCombAnticommute => {
                let (a, x, y) = even_comb_triple(w)?;
                if x >= y {
                    return None;
                }
                let mut p = MagmaPoly::monomial(w.clone());
                let ay = NaWord::node(a.clone(), NaWord::leaf(y));
                p.add_term(NaWord::node(ay, NaWord::leaf(x)), one());
                Some(p)
            }
            Family::EvenCombSquare => {
                let (_, x, y) = even_comb_triple(w)?;
                (x == y).then(|| MagmaPoly::monomial(w.clone()))
            }
            Family::Custom { matcher, .. } => {
                let p = matcher(w)?;
                (p.leading_key() == Some(w) && p.is_monic()).then_some(p)
            }
        }
    }
}

/// Splits `((a x) y)` with `a` an even-length left comb and `x, y` letters.
fn even_comb_triple(w: &NaWord) -> Option<(&NaWord, Letter, Letter)> {
    let (ax, y) = w.split()?;
    let y = y.as_leaf()?;
    let (a, x) = ax.split()?;
    let x = x.as_leaf()?;
    (a.len() % 2 == 0 && a.is_left_comb()).then_some((a, x, y))
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family({})", self.name())
    }
}

/// Either one explicit monic relation or a parametric family.
#[derive(Clone, Debug)]
pub enum RelationSchema {
    Explicit(MagmaPoly),
    Family(Family),
}

impl RelationSchema {
    /// Normalizes `p` to monic form.
    pub fn explicit(p: &MagmaPoly) -> Result<Self> {
        let (_, m) = p.leading_and_monic()?;
        Ok(Self::Explicit(m))
    }

    pub fn family(f: Family) -> Self {
        Self::Family(f)
    }

    pub fn instance_at(&self, w: &NaWord) -> Option<MagmaPoly> {
        match self {
            RelationSchema::Explicit(p) => (p.leading_key() == Some(w)).then(|| p.clone()),
            RelationSchema::Family(f) => f.instance_at(w),
        }
    }
}

/// One concrete monic relation drawn from a schema.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    /// Index of the originating schema in its [`RelationSet`].
    pub schema: usize,
    pub leading: NaWord,
    pub poly: MagmaPoly,
}

impl Instance {
    /// Two instances are the same relation when they come from the same
    /// schema with the same leading monomial.
    pub fn same_as(&self, other: &Instance) -> bool {
        self.schema == other.schema && self.leading == other.leading
    }
}

/// An ordered collection of relation schemas over a fixed alphabet.
#[derive(Clone, Debug)]
pub struct RelationSet {
    alphabet_size: usize,
    schemas: Vec<RelationSchema>,
    explicit_by_leading: HashMap<NaWord, Vec<usize>>,
    families: Vec<usize>,
}

impl RelationSet {
    pub fn new(alphabet_size: usize) -> Self {
        Self {
            alphabet_size,
            schemas: Vec::new(),
            explicit_by_leading: HashMap::new(),
            families: Vec::new(),
        }
    }

    pub fn with_schemas(alphabet_size: usize, schemas: impl IntoIterator<Item = RelationSchema>) -> Self {
        let mut set = Self::new(alphabet_size);
        for s in schemas {
            set.push(s);
        }
        set
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn schemas(&self) -> &[RelationSchema] {
        &self.schemas
    }

    pub fn len(&self) -> usize {
        self.schemas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.schemas.is_empty()
    }

    /// Appends a schema and returns its index. Explicit relations are stored
    /// monic.
    pub fn push(&mut self, schema: RelationSchema) -> usize {
        let idx = self.schemas.len();
        let schema = match schema {
            RelationSchema::Explicit(p) => {
                let (lead, m) = p
                    .leading_and_monic()
                    .expect("explicit relations are nonzero");
                self.explicit_by_leading.entry(lead).or_default().push(idx);
                RelationSchema::Explicit(m)
            }
            fam @ RelationSchema::Family(_) => {
                self.families.push(idx);
                fam
            }
        };
        self.schemas.push(schema);
        idx
    }

    pub fn push_explicit(&mut self, p: &MagmaPoly) -> Result<usize> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.push(RelationSchema::Explicit(p.clone())))
    }

    pub fn explicit_relations(&self) -> impl Iterator<Item = &MagmaPoly> + '_ {
        self.schemas.iter().filter_map(|s| match s {
            RelationSchema::Explicit(p) => Some(p),
            RelationSchema::Family(_) => None,
        })
    }

    /// All instances whose leading monomial is `w`, in schema order.
    pub fn instances_at(&self, w: &NaWord) -> Vec<Instance> {
        let mut idx: Vec<usize> = self
            .explicit_by_leading
            .get(w)
            .map(|v| v.to_vec())
            .unwrap_or_default();
        idx.extend(
            self.families
                .iter()
                .copied()
                .filter(|&i| self.schemas[i].instance_at(w).is_some()),
        );
        idx.sort_unstable();
        idx.into_iter()
            .filter_map(|i| {
                self.schemas[i].instance_at(w).map(|poly| Instance {
                    schema: i,
                    leading: w.clone(),
                    poly,
                })
            })
            .collect()
    }

    /// The first instance (by schema order) with leading monomial `w`.
    pub fn first_instance_at(&self, w: &NaWord) -> Option<Instance> {
        let explicit = self.explicit_by_leading.get(w).and_then(|v| v.first().copied());
        let family = self
            .families
            .iter()
            .copied()
            .find(|&i| explicit.is_none_or(|e| i < e) && self.schemas[i].instance_at(w).is_some());
        let i = family.or(explicit)?;
        Some(Instance {
            schema: i,
            leading: w.clone(),
            poly: self.schemas[i].instance_at(w)?,
        })
    }

    pub fn is_leading(&self, w: &NaWord) -> bool {
        self.explicit_by_leading.contains_key(w)
            || self
                .families
                .iter()
                .any(|&i| self.schemas[i].instance_at(w).is_some())
    }

    /// Outermost-leftmost subtree of `w` that is a leading monomial.
    pub fn find_redex(&self, w: &NaWord) -> Option<(TreePath, Instance)> {
        w.subtrees()
            .into_iter()
            .find_map(|(p, sub)| self.first_instance_at(sub).map(|i| (p, i)))
    }

    /// Innermost-leftmost redex: the first match in postorder.
    pub fn find_innermost_redex(&self, w: &NaWord) -> Option<(TreePath, Instance)> {
        fn walk(set: &RelationSet, w: &NaWord, at: &mut TreePath) -> Option<(TreePath, Instance)> {
            if let Some((l, r)) = w.split() {
                at.0.push(crate::word::Step::Left);
                let found = walk(set, l, at);
                at.0.pop();
                if found.is_some() {
                    return found;
                }
                at.0.push(crate::word::Step::Right);
                let found = walk(set, r, at);
                at.0.pop();
                if found.is_some() {
                    return found;
                }
            }
            set.first_instance_at(w).map(|i| (at.clone(), i))
        }
        walk(self, w, &mut TreePath::root())
    }

    pub fn is_reducible(&self, w: &NaWord) -> bool {
        w.subtrees().into_iter().any(|(_, sub)| self.is_leading(sub))
    }
}
