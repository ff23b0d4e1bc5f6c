//! Local factors, class-group Bessel sums and L-value checks for degree-2
//! Siegel modular forms of squarefree level.

pub mod exact_algebra;
pub mod local_nonarch;
pub mod local_arch;
pub mod lvalues;
pub mod modforms;
pub mod quadfields;
pub mod verifier;
