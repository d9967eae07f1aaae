//! Composition–Diamond machinery for free non-associative algebras.

pub mod compose;
pub mod irreducible;
pub mod reduce;
pub mod relation;

pub use compose::{
    complete, compositions_at, inclusion_compositions, verify_gsb, Completion, Composition,
    CompositionFailure, GsbReport,
};
pub use irreducible::{irreducible_counts, irreducible_words};
pub use reduce::{normal_form, replay, Reducer, RewriteStep, Strategy};
pub use relation::{Family, Instance, Matcher, RelationSchema, RelationSet};
