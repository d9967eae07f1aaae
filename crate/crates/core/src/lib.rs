//! Exact computation with non-associative words, Gröbner–Shirshov bases of
//! pre-commutative envelopes, free Zinbiel algebras, and the Rota–Baxter
//! power-series embedding of envelopes of filtered algebras.

pub mod algebra;
pub mod compoly;
pub mod embed;
pub mod envelope;
pub mod error;
pub mod filtered;
pub mod gsb;
pub mod linalg;
pub mod lincomb;
pub mod poly;
pub mod rational;
pub mod series;
pub mod word;
pub mod zinbiel;

pub use algebra::CommAlgebra;
pub use compoly::{ComMonomial, ComPoly, GenSymbol};
pub use embed::EmbeddingReport;
pub use error::{Error, Result};
pub use filtered::FilteredAlgebra;
pub use lincomb::LinComb;
pub use poly::{substitute, MagmaPoly};
pub use rational::Rational;
pub use series::TruncSeries;
pub use word::{Alphabet, AWord, Direction, Letter, NaWord, Step, TreePath};
pub use zinbiel::{PermAlgebra, ZinbElement};
