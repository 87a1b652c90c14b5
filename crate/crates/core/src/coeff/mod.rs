//! Exact scalars: Gaussian rationals, Laurent polynomials in half-powers of `q`, `qb`, `t`,
//! their fractions, conjugation and regime specialisation.

mod gauss;
mod laurent;
mod regime;
mod scalar;

pub use gauss::GaussianRational;
pub use laurent::{LaurentPoly, Mono};
pub use regime::{
    eval_at, eval_numeric, principal_sqrt, specialize, star, AtomImage, AtomValues, EvalError, Regime, Sign,
    Substitution,
};
pub use scalar::Scalar;
