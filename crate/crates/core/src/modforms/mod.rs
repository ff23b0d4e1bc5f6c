//! Level-1 elliptic modular forms, index-1 Jacobi forms / Kohnen plus-space
//! forms, Saito–Kurokawa Fourier coefficients, and file ingestion. All
//! arithmetic is exact.

use thiserror::Error;

use crate::quadfields::QuadForm;

mod bernoulli;
mod ingest;
mod jacobi;
mod qexp;

pub use bernoulli::{bernoulli_numbers, cohen_number, generalized_bernoulli};
pub use ingest::{
    ingest_kohnen, ingest_qexp, ingest_siegel_table, parse_kohnen, parse_qexp, parse_siegel_table, QExpansionFile,
    SiegelCoeffTable,
};
pub use jacobi::{jacobi_index1, sk_coefficient, KohnenForm, SKLift, SiegelCoefficients};
pub use qexp::{delta, divisor_sums, eisenstein, hecke_eigenvalue, level1_cusp_eigenform, QExpansion};

#[derive(Debug, Error)]
pub enum ModFormError {
    #[error("unsupported weight {0}")]
    UnsupportedWeight(i64),
    #[error("coefficient {needed} requested but only {available} known")]
    PrecisionExceeded { needed: u64, available: u64 },
    #[error("form is not Hecke-normalized (a_0 = 0, a_1 = 1)")]
    NotNormalized,
    #[error("{0} is not ≡ 0, 3 (mod 4) or exceeds the table")]
    BadDiscriminant(u64),
    #[error("{0} is not positive definite")]
    NotPositiveDefinite(QuadForm),
    #[error("conflicting values for the class of {form}: {first} and {second}")]
    Conflict { form: QuadForm, first: String, second: String },
    #[error("no coefficient for the class of {0}")]
    MissingCoefficient(QuadForm),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
