//! The factors `J_p` at primes dividing the level.

use num_traits::One;

use super::{spin_adjoint_factors, LocalError, ReprClass, ReprType, SatakeParams};
use crate::exact_algebra::{rat_pow, BigRat, Bindings, SymRat};

fn check_odd_prime(p: u64) -> Result<(), LocalError> {
    let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if !prime || p == 2 {
        return Err(LocalError::NotOddPrime(p));
    }
    Ok(())
}

/// `J_p` at a prime where the newform's local component is ramified:
/// `(1+p⁻²)(1+p⁻¹)` for IIIa, twice that for VIb, and 0 otherwise.
pub fn jp_global(repr: &ReprClass, p: u64) -> Result<BigRat, LocalError> {
    check_odd_prime(p)?;
    let pr = BigRat::from_integer(p.into());
    let base = (BigRat::one() + rat_pow(&pr, -2)) * (BigRat::one() + rat_pow(&pr, -1));
    Ok(match repr.tag {
        ReprType::IIIa => base,
        ReprType::VIb => base * BigRat::from_integer(2.into()),
        _ => BigRat::from_integer(0.into()),
    })
}

/// Position of `p` relative to the oldform data `f = δ_{a,b,c,d}(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OldformBranch {
    /// `p | bd`
    Bd,
    /// `p | ac`
    Ac,
}

/// `J_p` for an oldform at a prime where `g` is unramified with rational
/// Satake parameters `α, β`: `L(1, π_p, Std)(1 − p⁻⁴)`, times `p⁻¹` when
/// `p | ac`.
pub fn jp_oldform(branch: OldformBranch, p: u64, alpha: &BigRat, beta: &BigRat) -> Result<BigRat, LocalError> {
    check_odd_prime(p)?;
    let params = SatakeParams::rational(SymRat::sqrt_q(), alpha.clone(), beta.clone())?;
    let std = spin_adjoint_factors(&params, &BigRat::one())?.standard;
    let pr = BigRat::from_integer(p.into());
    let value = std
        .substitute(&Bindings::new().with_q(pr.clone()))?
        .as_constant()
        .ok_or(crate::exact_algebra::AlgebraError::OddPowerOfSqrtQ)?;
    let mut out = value * (BigRat::one() - rat_pow(&pr, -4));
    if branch == OldformBranch::Ac {
        out /= pr;
    }
    Ok(out)
}
