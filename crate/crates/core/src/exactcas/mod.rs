//! Exact coefficient arithmetic: rationals, multivariate polynomials,
//! rational functions over the parameter symbols, and Gröbner-basis
//! reduction in the expansion constants.

pub mod expr;
pub mod gcd;
pub mod groebner;
pub mod poly;
pub mod rational;
pub mod scalar;

use thiserror::Error;

pub use expr::{parse_expr, parse_scalar, Expr};
pub use gcd::{poly_gcd, poly_lcm};
pub use groebner::{groebner_basis, ideal_from_polys, RelationIdeal, UnknownPoly};
pub use poly::Poly;
pub use rational::{parse_rational, Rational};
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CasError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} unknowns requested; at most 3 are supported")]
    TooManyUnknowns(usize),
    #[error("polynomial over unknowns {0:?} used with ideal over {1:?}")]
    MismatchedUnknowns(Vec<String>, Vec<String>),
    #[error("denominator depends on unknown `{0}`")]
    UnknownInDenominator(String),
}
