//! Unramified local L-factors of GSp(4) at half-integral points.

use num_traits::ToPrimitive;

use super::{LocalError, SatakeParams};
use crate::exact_algebra::{AlgebraError, BigRat, SymRat};

/// Spin, twisted spin (by the unramified quadratic character), adjoint and
/// standard L-factors at one point `s`.
#[derive(Clone, Debug)]
pub struct LocalLFactors {
    pub spin: SymRat,
    pub spin_twisted: SymRat,
    pub adjoint: SymRat,
    pub standard: SymRat,
}

/// `Π (1 − x q^{-s})⁻¹` over a parameter list.
fn euler_factor(params: &[SymRat], q_minus_s: &SymRat) -> Result<SymRat, LocalError> {
    let mut den = SymRat::one();
    for x in params {
        let f = SymRat::one().try_sub(&x.try_mul(q_minus_s)?)?;
        if f.is_zero() {
            return Err(AlgebraError::Pole(format!("1 - ({x})q^-s vanishes")).into());
        }
        den = den.try_mul(&f)?;
    }
    Ok(den.inv()?)
}

/// Local L-factors at `s ∈ ½Z`.
///
/// Parameters: spin `{γ, αγ, βγ, αβγ}`; twisted spin the negatives;
/// adjoint `{α^±, β^±, (αβ)^±, (α/β)^±, 1, 1}`; standard `{1, α^±, β^±}`.
pub fn spin_adjoint_factors(p: &SatakeParams, s: &BigRat) -> Result<LocalLFactors, LocalError> {
    let two_s = s * BigRat::from_integer(2.into());
    if !two_s.is_integer() {
        return Err(LocalError::NotHalfInteger(s.clone()));
    }
    let e = two_s
        .to_integer()
        .to_i32()
        .ok_or_else(|| LocalError::NotHalfInteger(s.clone()))?;
    let q_minus_s = p.sqrt_q().pow(-e)?;

    let (a, b, g) = (p.alpha(), p.beta(), p.gamma());
    let ab = a.try_mul(b)?;
    let spin = vec![g.clone(), a.try_mul(g)?, b.try_mul(g)?, ab.try_mul(g)?];
    let twisted: Vec<SymRat> = spin.iter().map(SymRat::neg).collect();
    let a_over_b = a.try_div(b)?;
    let one = SymRat::one();
    let adjoint = vec![
        a.clone(),
        a.inv()?,
        b.clone(),
        b.inv()?,
        ab.clone(),
        ab.inv()?,
        a_over_b.clone(),
        a_over_b.inv()?,
        one.clone(),
        one.clone(),
    ];
    let standard = vec![one, a.clone(), a.inv()?, b.clone(), b.inv()?];

    Ok(LocalLFactors {
        spin: euler_factor(&spin, &q_minus_s)?,
        spin_twisted: euler_factor(&twisted, &q_minus_s)?,
        adjoint: euler_factor(&adjoint, &q_minus_s)?,
        standard: euler_factor(&standard, &q_minus_s)?,
    })
}
