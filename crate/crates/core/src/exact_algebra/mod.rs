//! Exact arithmetic kernel: rationals, Laurent-polynomial fractions, the
//! quadratic extension by `γ`, cyclotomic numbers, and closed-form reals.

use thiserror::Error;

mod closed;
mod cyclo;
mod frac;
mod poly;
mod symrat;

pub use closed::ClosedForm;
pub use cyclo::{cyclotomic_poly, Cyclo};
pub use frac::{Factor, Frac};
pub use poly::{rat_pow, Mono, Poly, Var, NVARS};
pub use symrat::{Bindings, SymRat};

/// Arbitrary-precision rational; always reduced with a positive denominator.
pub type BigRat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator {0} vanishes under the substitution")]
    Pole(String),
    #[error("γ binding is inconsistent with γ² = (αβ)⁻¹")]
    InconsistentGamma,
    #[error("operands live in different quadratic extensions")]
    RelationMismatch,
    #[error("odd power of q^(1/2) cannot be evaluated at rational q")]
    OddPowerOfSqrtQ,
    #[error("q and q^(1/2) bound simultaneously")]
    ConflictingBindings,
}

/// `n/d` as a `BigRat`.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}
