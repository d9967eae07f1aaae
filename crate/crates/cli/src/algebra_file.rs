//! JSON algebra descriptions.
//!
//! ```json
//! { "basis": ["x1", "x2", "x3"],
//!   "levels": [1, 2, 3],
//!   "products": ["x1 x1 -> x2", "x1 x2 -> x3"] }
//! ```
//!
//! `levels` is optional. Unlisted products are zero; a product may be given
//! in either order but only once. Right-hand sides are `0` or terms
//! `[coefficient] name` joined by ` + `.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use zinbiel_core::filtered::{standard_filtration, FilteredAlgebra};
use zinbiel_core::{CommAlgebra, Rational};

use crate::syntax::{format_rational, is_identifier, parse_rational};

#[derive(Debug, Error)]
pub enum AlgebraFileError {
    #[error("invalid JSON at {line}:{col}: {msg}")]
    Json { line: usize, col: usize, msg: String },
    #[error("products[{index}] ({entry:?}): {msg}")]
    Entry {
        index: usize,
        entry: String,
        msg: String,
    },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<u32>>,
    #[serde(default)]
    pub products: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedAlgebra {
    pub algebra: CommAlgebra,
    pub levels: Option<Vec<u32>>,
}

impl ParsedAlgebra {
    /// Uses the given levels when present, otherwise the filtration by powers.
    pub fn filtered(&self) -> zinbiel_core::Result<FilteredAlgebra> {
        match &self.levels {
            Some(l) => FilteredAlgebra::validated(self.algebra.clone(), l.clone()),
            None => standard_filtration(&self.algebra),
        }
    }
}

fn entry_error(index: usize, entry: &str, msg: impl Into<String>) -> AlgebraFileError {
    AlgebraFileError::Entry {
        index,
        entry: entry.to_string(),
        msg: msg.into(),
    }
}

fn parse_rhs(
    rhs: &str,
    a: &CommAlgebra,
    index: usize,
    entry: &str,
) -> Result<Vec<Rational>, AlgebraFileError> {
    let mut coords = vec![Rational::zero(); a.dim()];
    if rhs.trim() == "0" {
        return Ok(coords);
    }
    for term in rhs.split(" + ") {
        let parts: Vec<&str> = term.split_whitespace().collect();
        let (c, name) = match parts.as_slice() {
            [name] => (Rational::one(), *name),
            [c, name] => (
                parse_rational(c)
                    .ok_or_else(|| entry_error(index, entry, format!("bad coefficient {c:?}")))?,
                *name,
            ),
            _ => return Err(entry_error(index, entry, format!("bad term {term:?}"))),
        };
        let k = a
            .index_of(name)
            .ok_or_else(|| entry_error(index, entry, format!("unknown basis element {name:?}")))?;
        coords[k] += c;
    }
    Ok(coords)
}

impl AlgebraFile {
    pub fn parse_json(text: &str) -> Result<Self, AlgebraFileError> {
        serde_json::from_str(text).map_err(|e| AlgebraFileError::Json {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn to_algebra(&self) -> Result<ParsedAlgebra, AlgebraFileError> {
        if let Some(bad) = self.basis.iter().find(|n| !is_identifier(n)) {
            return Err(AlgebraFileError::Invalid(format!(
                "{bad:?} is not a valid basis name"
            )));
        }
        let mut a = CommAlgebra::trivial(self.basis.clone())
            .map_err(|e| AlgebraFileError::Invalid(e.to_string()))?;
        let mut seen = Vec::new();
        for (index, entry) in self.products.iter().enumerate() {
            let (lhs, rhs) = entry
                .split_once("->")
                .ok_or_else(|| entry_error(index, entry, "expected \"x y -> ...\""))?;
            let names: Vec<&str> = lhs.split_whitespace().collect();
            let [x, y] = names.as_slice() else {
                return Err(entry_error(index, entry, "left side must name two basis elements"));
            };
            let i = a
                .index_of(x)
                .ok_or_else(|| entry_error(index, entry, format!("unknown basis element {x:?}")))?;
            let j = a
                .index_of(y)
                .ok_or_else(|| entry_error(index, entry, format!("unknown basis element {y:?}")))?;
            let key = (i.min(j), i.max(j));
            if seen.contains(&key) {
                return Err(entry_error(index, entry, "product given twice"));
            }
            seen.push(key);
            let coords = parse_rhs(rhs, &a, index, entry)?;
            a.set_product(i, j, coords)
                .map_err(|e| entry_error(index, entry, e.to_string()))?;
        }
        if let Some(l) = &self.levels {
            if l.len() != a.dim() {
                return Err(AlgebraFileError::Invalid(format!(
                    "{} levels for {} basis elements",
                    l.len(),
                    a.dim()
                )));
            }
        }
        Ok(ParsedAlgebra {
            algebra: a,
            levels: self.levels.clone(),
        })
    }

    /// The nonzero products `xᵢ * xⱼ` with `i ≤ j`.
    pub fn from_algebra(a: &CommAlgebra, levels: Option<&[u32]>) -> Self {
        let names = a.names();
        let mut products = Vec::new();
        for i in 0..a.dim() {
            for j in i..a.dim() {
                let terms: Vec<String> = a
                    .product(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        if c.is_one() {
                            names[k].clone()
                        } else {
                            format!("{} {}", format_rational(c), names[k])
                        }
                    })
                    .collect();
                if !terms.is_empty() {
                    products.push(format!("{} {} -> {}", names[i], names[j], terms.join(" + ")));
                }
            }
        }
        Self {
            basis: names.to_vec(),
            levels: levels.map(<[u32]>::to_vec),
            products,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

pub fn parse_algebra(text: &str) -> Result<ParsedAlgebra, AlgebraFileError> {
    AlgebraFile::parse_json(text)?.to_algebra()
}
