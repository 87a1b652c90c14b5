//! The concrete algebras: quantum Minkowski relations per regime, the crossed product with
//! the spinor generators, and the braided tensor square used for the translation coproduct.

use alloc::string::String;

use crate::coeff::Regime;
use crate::rewrite::RewriteError;

pub mod braided;
pub mod crossed;
pub mod minkowski;
pub mod suites;

pub use minkowski::{minkowski_system, pbw_obstruction_generic, MinkowskiAlgebra, PbwObstruction, Source};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("relation spans differ in {regime}: {what}")]
    SpanMismatch { regime: Regime, what: String },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("oracle substitution not certified: {0}")]
    OracleUnverified(String),
    #[error("{what} is not available in regime {regime}")]
    Unsupported { what: &'static str, regime: Regime },
}

#[cfg(test)]
mod tests;
