//! Exact symbolic engine for the Cayley–Klein family of 3d isometry and
//! (2+1)d kinematical Lie algebras: construction, contraction, enveloping
//! algebra arithmetic, and Casimir-driven expansions.

pub mod cli;
pub mod exactcas;
pub mod expand;
pub mod liealg;
pub mod uea;
