//! Imaginary quadratic fields through binary quadratic forms: fundamental
//! discriminants, reduction, Gauss composition, class groups and their
//! characters, Kronecker symbols and `L(1, χ_d)`.

use thiserror::Error;

mod disc;
mod forms;
mod group;

pub use disc::{
    dirichlet_l_one, is_fundamental, kronecker, l_one_numeric, s_matrix, trace_s, w_of, DirichletLOne,
};
pub use forms::{compose, reduce, reduced_forms, QuadForm};
pub use group::{characters, class_group, class_number, ClassCharacter, QuadClassGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("{0} is not a negative fundamental discriminant")]
    NotFundamental(i64),
    #[error("form {0} is not positive definite")]
    NotPositiveDefinite(QuadForm),
    #[error("forms {0} and {1} have different discriminants")]
    DiscriminantMismatch(QuadForm, QuadForm),
    #[error("composition produced {0}, which is not in the reduced list")]
    NotReduced(QuadForm),
}
