//! The named intertwiners and the matrix-identity suites built on them.

use alloc::string::String;

use crate::coeff::{Regime, Sign};
use crate::tensor::TMap;

pub mod identities;
mod ops;
pub mod suites;

pub use ops::{
    e_functional, e_vector, pauli_basis, pauli_basis_inv, wr_scalar, x_inv_matrix, x_matrix, x_unrescaled, Consts, Name,
    Ops, Variant,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("unknown operator name `{0}`")]
    UnknownName(String),
    #[error("missing parameter: {0}")]
    MissingParameter(&'static str),
    #[error("unknown regime `{0}`")]
    UnknownRegime(String),
}

/// An operator together with the regime it was specialised to.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedOperator {
    pub name: Name,
    pub regime: Regime,
    pub value: TMap,
}

/// Builds the operator labelled `name` (see [`Name::label`]) in `regime`.
pub fn build(name: &str, regime: Regime) -> Result<NamedOperator, BuildError> {
    let n = Name::from_label(name).ok_or_else(|| BuildError::UnknownName(name.into()))?;
    Ok(NamedOperator { name: n, regime, value: Ops::build(regime).named(n) })
}

/// Parses a regime name; a bare `case2` lacks the sign of `ε`.
pub fn parse_regime(s: &str) -> Result<Regime, BuildError> {
    match s {
        "case2" => Err(BuildError::MissingParameter("case2 needs the sign of epsilon: case2+ or case2-")),
        "case2+1" => Ok(Regime::Case2(Sign::Plus)),
        "case2-1" => Ok(Regime::Case2(Sign::Minus)),
        _ => Regime::from_name(s).ok_or_else(|| BuildError::UnknownRegime(s.into())),
    }
}

#[cfg(test)]
mod tests;
