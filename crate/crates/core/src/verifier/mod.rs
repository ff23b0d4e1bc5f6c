//! Assembly of the global identities and the check runner: Bessel sums
//! over class groups, the explicit constants, the Saito–Kurokawa ratio
//! test, and a configurable suite emitting [`VerificationReport`]s.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exact_algebra::{int, rat_pow, BigRat, ClosedForm};

mod bessel;
pub mod checks;
mod identities;
mod report;
mod suite;

pub use bessel::{bessel_sum, bessel_sum_from_values, BesselSum};
pub use identities::{sk_ratio_check, sk_ratio_check_with, tmain_rhs, SkData};
pub use report::{relative_error, VerificationReport};
pub use suite::{
    run_check, run_suite, ArchConfig, CheckKind, ClassGroupConfig, ConstantsConfig, CosetConfig, MacdonaldConfig,
    RangeConfig, SkConfig, SuiteConfig, VanishingConfig,
};

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error(transparent)]
    ModForm(#[from] crate::modforms::ModFormError),
    #[error(transparent)]
    LValue(#[from] crate::lvalues::LValueError),
    #[error(transparent)]
    Quad(#[from] crate::quadfields::QuadError),
    #[error(transparent)]
    Local(#[from] crate::local_nonarch::LocalError),
    #[error("level {0} is not odd and squarefree")]
    Level(u64),
    #[error("representations given at primes {primes:?}, but the level is {level}")]
    PrimeMismatch { level: u64, primes: Vec<u64> },
    #[error("{0} is not a negative fundamental discriminant")]
    Discriminant(i64),
    #[error("({d}/{p}) ≠ −1: the prime {p} is not inert in Q(√{d})")]
    NotInert { d: i64, p: u64 },
    #[error("weight {0} is not supported (expected 10 or 12)")]
    Weight(i64),
    #[error("configuration: {0}")]
    Config(String),
}

/// `c_k = 2^{4k−6}·π^{2k+1}/(2k−2)!`.
pub fn boecherer_constant(k: i64) -> ClosedForm {
    let fact = (1..=2 * k - 2).fold(BigInt::one(), |acc, i| acc * i);
    ClosedForm::rational(rat_pow(&int(2), (4 * k - 6) as i32) / BigRat::from_integer(fact))
        .mul(&ClosedForm::pi_pow((2 * k + 1) as i32))
}
