//! Casimir-driven expansions: split the target Casimirs along the expanded
//! coefficient, build `J = a1 J1 + a2 J2`, define primed generators
//! `X' = [J, X]` (or `X` when it commutes with `J`), derive the equations on
//! `a1`, `a2`, and check that the primed generators close the target algebra.

pub mod atlas;
pub mod closure;
pub mod constraints;
pub mod numeric;
pub mod problem;
pub mod report;
pub mod steps;

use thiserror::Error;

use crate::exactcas::CasError;
use crate::liealg::LieError;
use crate::uea::UeaError;

pub use atlas::{atlas_arrows, run_atlas, AtlasArrow, AtlasEntry};
pub use closure::{closure_analysis, ClosureReport};
pub use constraints::{
    derive_constraints, verify_expansion, BracketClass, ConstraintSet, PairRelation, PairVerdict,
};
pub use numeric::{numeric_residuals, NumericResidual};
pub use problem::{ExpandOptions, Expectation, ExpansionProblem};
pub use report::{run_expansion, ExpansionReport, Verdict};
pub use steps::{
    build_j, build_primed_generators, centralizer_split, split_casimirs, CasimirSplit,
    HypothesisReport, PrimedGenerator,
};

/// The expansion constants, in order.
pub const ALPHAS: [&str; 2] = ["a1", "a2"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExpandError {
    #[error("nothing to expand: {0}")]
    NothingToExpand(String),
    #[error("Casimir C{0} is not linear in {1}")]
    NonLinearSplit(u8, String),
    #[error("{0} does not contract to {1} along axis {2}")]
    BaseMismatch(String, String, u8),
    #[error("target and initial algebras use different generators")]
    GeneratorMismatch,
    #[error("inconsistent constraints: bracket [{0},{1}] requires {2}")]
    Inconsistent(String, String, String),
    #[error("no expansion from `{0}` to `{1}` along axis {2}")]
    UnknownArrow(String, String, u8),
    #[error("numeric evaluation failed: {0}")]
    Numeric(String),
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cas(#[from] CasError),
}
