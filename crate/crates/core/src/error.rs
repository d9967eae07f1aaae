use thiserror::Error;

use crate::word::TreePath;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no leading monomial: polynomial is zero")]
    ZeroPolynomial,
    #[error("cannot bracket an empty letter sequence")]
    EmptyBracket,
    #[error("associative words must be nonempty")]
    EmptyWord,
    #[error("path {path} does not address a subtree")]
    InvalidPath { path: TreePath },
    #[error("instantiation bound exceeded: monomial of length {len} exceeds bound {bound}")]
    BoundExceeded { len: usize, bound: usize },
    #[error("alphabet error: {0}")]
    Alphabet(String),
    #[error("perm identity fails on basis triple ({0}, {1}, {2})")]
    PermIdentity(usize, usize, usize),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("truncation below level: N = {n} but level is {level}")]
    TruncationBelowLevel { n: usize, level: u32 },
    #[error("no positive filtration: algebra not nilpotent")]
    NotNilpotent,
    #[error("filtration violated: {0}")]
    Filtration(String),
    #[error("invalid algebra: {0}")]
    Algebra(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
