//! Non-archimedean local factors for GSp(4): Macdonald's spherical matrix
//! coefficient, the `ZG(o)h(ℓ,m)G(o)` double-coset classifier, `J₀`/`J` for
//! spherical and `P₁`-fixed vectors, and the global table of `J_p`.
//!
//! Symbolic computations live in [`SymRat`], where `q^{1/2}` is the variable
//! [`Var::R`] and `γ² = (αβ)⁻¹`.

use num_complex::Complex64;
use thiserror::Error;

use crate::exact_algebra::{AlgebraError, BigRat, Frac, SymRat, Var};

mod coset;
mod global;
mod lfactors;
mod macdonald;
mod p1;
mod ramified;

pub use coset::{classify_double_coset, padic_valuation, CosetIndex, Valuation};
pub use global::{jp_global, jp_oldform, OldformBranch};
pub use lfactors::{spin_adjoint_factors, LocalLFactors};
pub use macdonald::{macdonald_phi0, macdonald_phi0_numeric};
pub use p1::{j0_p1, j_p1, lambda_mu, LocalFactorResult, P1Vector, ReprClass, ReprType};
pub use ramified::{
    j0_spherical_ramified, j_spherical_ramified, norm_const_ramified, Sign, SphericalType,
    TorusRep,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LocalError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("Satake parameters violate αβγ² = 1")]
    Similitude,
    #[error("Satake parameters lie within {radius:e} of the singular locus ({which})")]
    Singular { which: &'static str, radius: f64 },
    #[error("representation {repr} has no P1-fixed vector with index {index}")]
    UnknownVector { repr: ReprType, index: u8 },
    #[error("representation {0} has no P1-fixed vector")]
    NoP1Vector(ReprType),
    #[error("internal identity failed: {0}")]
    IdentityFailure(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("v(u) must be 0 or 1, got {0:?}")]
    UnitValuation(Valuation),
    #[error("{0} is not a half-integer")]
    NotHalfInteger(BigRat),
    #[error("unknown representation type {0:?}")]
    UnknownRepr(String),
}

/// Satake parameters `(α, β, γ)` of an unramified representation with trivial
/// central character, together with `q^{1/2}`.
///
/// `sqrt_q` is normally the variable `q^{1/2}` itself; binding it to a
/// rational gives exact evaluation at square `q`.
#[derive(Clone, Debug)]
pub struct SatakeParams {
    sqrt_q: SymRat,
    alpha: SymRat,
    beta: SymRat,
    gamma: SymRat,
}

impl SatakeParams {
    /// Validate `αβγ² = 1` exactly.
    pub fn new(sqrt_q: SymRat, alpha: SymRat, beta: SymRat, gamma: SymRat) -> Result<Self, LocalError> {
        let prod = alpha.try_mul(&beta)?.try_mul(&gamma.try_mul(&gamma)?)?;
        if !prod.eq_exact(&SymRat::one())? {
            return Err(LocalError::Similitude);
        }
        Ok(Self { sqrt_q, alpha, beta, gamma })
    }

    /// Fully symbolic `q, α, β, γ` with `γ² = (αβ)⁻¹`.
    pub fn generic() -> Self {
        Self {
            sqrt_q: SymRat::sqrt_q(),
            alpha: SymRat::alpha(),
            beta: SymRat::beta(),
            gamma: SymRat::gamma(),
        }
    }

    /// Parameters of the type IIb representation `χ1_{GL(2)} ⋊ χ⁻¹` with
    /// `t = χ(ϖ)` symbolic: `α = t q^{-1/2}`, `β = t q^{1/2}`, `γ = t⁻¹`.
    pub fn iib() -> Self {
        let t = SymRat::var(Var::T);
        let r = SymRat::sqrt_q();
        let tinv = t.inv().expect("t is a unit");
        Self {
            alpha: t.try_div(&r).expect("r is a unit"),
            beta: t.try_mul(&r).expect("pure polynomial"),
            gamma: tinv,
            sqrt_q: r,
        }
    }

    /// Rational `α, β` with `γ = √((αβ)⁻¹)` kept formal; `sqrt_q` may be a
    /// rational or the symbolic `q^{1/2}`.
    pub fn rational(sqrt_q: SymRat, alpha: BigRat, beta: BigRat) -> Result<Self, LocalError> {
        let ab = &alpha * &beta;
        if num_traits::Zero::is_zero(&ab) {
            return Err(AlgebraError::DivisionByZero.into());
        }
        let gamma = SymRat::gamma_with_square(Frac::constant(num_traits::Inv::inv(ab)));
        Self::new(sqrt_q, SymRat::constant(alpha), SymRat::constant(beta), gamma)
    }

    /// Apply `(β, γ) ↦ (β⁻¹, βγ)`, the second generator of the Weyl group
    /// action on the Satake torus.
    pub fn reflect_beta(&self) -> Result<Self, LocalError> {
        Ok(Self {
            sqrt_q: self.sqrt_q.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.inv()?,
            gamma: self.beta.try_mul(&self.gamma)?,
        })
    }

    /// Apply `α ↔ β`.
    pub fn swap_alpha_beta(&self) -> Self {
        Self {
            sqrt_q: self.sqrt_q.clone(),
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            gamma: self.gamma.clone(),
        }
    }

    pub fn sqrt_q(&self) -> &SymRat {
        &self.sqrt_q
    }

    pub fn q(&self) -> SymRat {
        self.sqrt_q.try_mul(&self.sqrt_q).expect("sqrt_q is γ-free")
    }

    pub fn alpha(&self) -> &SymRat {
        &self.alpha
    }

    pub fn beta(&self) -> &SymRat {
        &self.beta
    }

    pub fn gamma(&self) -> &SymRat {
        &self.gamma
    }
}

/// Floating Satake parameters, for quick evaluation away from exact
/// arithmetic.
#[derive(Clone, Copy, Debug)]
pub struct NumericSatake {
    pub q: f64,
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
}

/// Distance from the singular locus below which numeric evaluation is refused.
pub const SINGULAR_RADIUS: f64 = 1e-8;

impl NumericSatake {
    pub fn new(q: f64, alpha: Complex64, beta: Complex64, gamma: Complex64) -> Result<Self, LocalError> {
        if (alpha * beta * gamma * gamma - 1.0).norm() > 1e-12 {
            return Err(LocalError::Similitude);
        }
        let one = Complex64::new(1.0, 0.0);
        let checks = [
            ("α = β", alpha - beta),
            ("α = 1", alpha - one),
            ("β = 1", beta - one),
            ("αβ = 1", alpha * beta - one),
        ];
        for (which, gap) in checks {
            if gap.norm() < SINGULAR_RADIUS {
                return Err(LocalError::Singular { which, radius: SINGULAR_RADIUS });
            }
        }
        Ok(Self { q, alpha, beta, gamma })
    }

    /// `γ` chosen as the principal square root of `(αβ)⁻¹`.
    pub fn from_alpha_beta(q: f64, alpha: Complex64, beta: Complex64) -> Result<Self, LocalError> {
        let gamma = (alpha * beta).inv().sqrt();
        Self::new(q, alpha, beta, gamma)
    }
}
