//! Lie algebras given by structure constants: the Cayley–Klein family, the
//! extended Galilei algebra, involutions, Cartan decompositions,
//! contractions and the catalog of named cells.

pub mod algebra;
pub mod cartan;
pub mod catalog;
pub mod check;
pub mod contraction;
pub mod definition;
pub mod families;
pub mod involution;

use thiserror::Error;

use crate::exactcas::CasError;

pub use algebra::{fmt_lincomb, Family, LieAlgebra, LinComb};
pub use cartan::{cartan_check, CartanReport};
pub use catalog::{
    builtin_algebra, builtin_names, catalog, catalog_arrows, catalog_lookup, ArrowDirection,
    CatalogArrow, CatalogEntry, ParamMode, Sign,
};
pub use check::{check_structure, JacobiResult, StructureReport};
pub use contraction::{contract, ContractionKind};
pub use definition::{algebra_from_json, algebra_to_json, AlgebraDefinition};
pub use families::{ck_symbolic, make_ck_algebra, make_extended_galilei, with_central_generator};
pub use involution::{apply_involution, Decomposition, Involution, InvolutionKind, InvolutionReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LieError {
    #[error("generator `{0}` listed twice")]
    DuplicateGenerator(String),
    #[error("generator index out of range")]
    IndexOutOfRange,
    #[error("antisymmetry violated: {0}")]
    Antisymmetry(String),
    #[error("`{0}` is used both as a generator and as a parameter")]
    NameClash(String),
    #[error(transparent)]
    Cas(#[from] CasError),
    #[error("contraction undefined: {0} picks up a negative power of epsilon")]
    NegativeEpsilonPower(String),
    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),
    #[error("catalog key `{0}` is ambiguous, candidates: {1:?}")]
    AmbiguousCatalogKey(String, Vec<String>),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("involution {0} has no sign for generator `{1}`")]
    UnsupportedInvolution(String, String),
    #[error("bracket {0} is not a linear combination of generators")]
    NotLinear(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("symbol `{0}` is neither a generator nor a declared parameter")]
    UndeclaredParameter(String),
    #[error("malformed bracket key `{0}`, expected `[X,Y]`")]
    BadBracketKey(String),
    #[error("invalid algebra definition: {0}")]
    Json(String),
}
