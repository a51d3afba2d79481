//! Universal enveloping algebra arithmetic in the PBW basis: normal
//! ordering, products, commutators, Casimir elements, centrality, and
//! reduction modulo central relations `C - c`.

pub mod casimir;
pub mod central;
pub mod element;
pub mod monomial;
pub mod text;

use thiserror::Error;

use crate::exactcas::CasError;
use crate::liealg::LieError;

pub use casimir::{casimir, casimir_formula};
pub use central::{
    central_reduce, default_bound, is_central, Centrality, CentralReducer, CentralReduction,
    CentralRelation,
};
pub use element::{pbw_normalize, UEAElement};
pub use monomial::PbwMonomial;
pub use text::parse_element;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum UeaError {
    #[error("elements belong to different algebras ({0} and {1})")]
    MixedAlgebras(String, String),
    #[error("no Casimir formula for {0}")]
    UnsupportedCasimir(String),
    #[error("Casimir product {0} has non-commuting factors")]
    OrderingAmbiguity(String),
    #[error("{element} is not central: commutator with {generator} is {residual}")]
    NotCentral {
        element: String,
        generator: String,
        residual: String,
    },
    #[error("degree bound {bound} is below the {required} needed for a degree-{degree} element")]
    BoundExceeded {
        bound: usize,
        required: usize,
        degree: usize,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("division by an element that is not a scalar")]
    NonScalarDivision,
    #[error(transparent)]
    Cas(#[from] CasError),
    #[error(transparent)]
    Lie(#[from] LieError),
}
