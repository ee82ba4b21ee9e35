//! Contingency logic over neighborhood frames.
//!
//! The crate covers the formula language with `Δ` (contingency) and `□`
//! (necessity), neighborhood semantics, frame transforms, a Hilbert-style
//! derivation checker for the contingency systems and bounded countermodel
//! search.

pub mod fixtures;
pub mod model_format;
pub mod proof;
pub mod search;
pub mod semantics;
pub mod suite;
pub mod syntax;
pub mod transform;

pub use model_format::{parse_model, write_frame, write_model, ModelFormatError};
pub use proof::{check_derivation, parse_derivation, Derivation, ProofError, SchemaName, SystemId};
pub use search::{find_countermodel, Mode, SearchError, SearchReport};
pub use semantics::{eval, Frame, Model, PropertySet, StateSet};
pub use syntax::{parse, print, Atom, Formula, MetaVar, Substitution, SyntaxError};
pub use transform::{close_under, complementation, star_translate, supplementation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/formulas.md")]
    struct Formulas;
    #[doc = include_str!("../../../book/src/semantics.md")]
    struct Semantics;
    #[doc = include_str!("../../../book/src/transforms.md")]
    struct Transforms;
    #[doc = include_str!("../../../book/src/proofs.md")]
    struct Proofs;
    #[doc = include_str!("../../../book/src/search.md")]
    struct Search;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
