//! `J₀` and `J` for the spherical vector when `K/F` is ramified and `Λ` is
//! unramified, in terms of Macdonald's `Φ₀`.
//!
//! The torus integral splits over the two classes `1` and `t_K` of
//! `T(F)/F^×T(o)`. Only the final expressions are implemented; the auxiliary
//! parameter of the `t_K` computation drops out of them.

use std::fmt;
use std::str::FromStr;

use super::{macdonald_phi0, CosetIndex, LocalError, SatakeParams};
use crate::exact_algebra::SymRat;

/// The two torus classes contributing to `J₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorusRep {
    Trivial,
    TK,
}

/// The value `l = Λ(ϖ_K) ∈ {±1}` of an unramified `Λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(format!("expected +1 or -1, got {other:?}")),
        }
    }
}

/// Spherical representations covered: generic type I, and type IIb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SphericalType {
    I,
    IIb,
}

impl fmt::Display for SphericalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SphericalType::I => "I",
            SphericalType::IIb => "IIb",
        })
    }
}

impl FromStr for SphericalType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "I" => Ok(SphericalType::I),
            "IIb" => Ok(SphericalType::IIb),
            other => Err(format!("expected I or IIb, got {other:?}")),
        }
    }
}

fn phi(p: &SatakeParams, l: u32, m: u32) -> Result<SymRat, LocalError> {
    macdonald_phi0(p, CosetIndex::new(l, m))
}

/// `J₀(φ, 1)` restricted to one torus class:
///
/// - trivial: `1 − Φ₀(h(0,1)) − q²Φ₀(h(0,2)) + q²Φ₀(h(2,1))`
/// - `t_K`: `qΦ₀(h(1,0)) − (q²+q)Φ₀(h(1,1)) + q²Φ₀(h(3,0))`
pub fn j0_spherical_ramified(p: &SatakeParams, which: TorusRep) -> Result<SymRat, LocalError> {
    let q = p.q();
    let q2 = q.try_mul(&q)?;
    Ok(match which {
        TorusRep::Trivial => SymRat::one()
            .try_sub(&phi(p, 0, 1)?)?
            .try_sub(&q2.try_mul(&phi(p, 0, 2)?)?)?
            .try_add(&q2.try_mul(&phi(p, 2, 1)?)?)?,
        TorusRep::TK => q
            .try_mul(&phi(p, 1, 0)?)?
            .try_sub(&q2.try_add(&q)?.try_mul(&phi(p, 1, 1)?)?)?
            .try_add(&q2.try_mul(&phi(p, 3, 0)?)?)?,
    })
}

/// The normalizing constant
/// `C = (1+q⁻¹)²(1+q⁻²) / [(1+lγαq^{-1/2})(1+lγq^{-1/2})(1+lγ⁻¹q^{-1/2})(1+lγβq^{-1/2})
///      (1−αq⁻¹)(1−α⁻¹q⁻¹)(1−βq⁻¹)(1−β⁻¹q⁻¹)]`.
pub fn norm_const_ramified(p: &SatakeParams, l: Sign) -> Result<SymRat, LocalError> {
    let one = SymRat::one();
    let rinv = p.sqrt_q().inv()?;
    let qinv = rinv.try_mul(&rinv)?;
    let q2inv = qinv.try_mul(&qinv)?;
    let sign = SymRat::int(l.as_i64());
    let (a, b, g) = (p.alpha(), p.beta(), p.gamma());

    let one_plus_qinv = one.try_add(&qinv)?;
    let num = one_plus_qinv.try_mul(&one_plus_qinv)?.try_mul(&one.try_add(&q2inv)?)?;

    let half = [g.try_mul(a)?, g.clone(), g.inv()?, g.try_mul(b)?];
    let full = [a.clone(), a.inv()?, b.clone(), b.inv()?];
    let mut den = SymRat::one();
    for x in &half {
        let f = one.try_add(&sign.try_mul(x)?.try_mul(&rinv)?)?;
        den = den.try_mul(&nonzero(f)?)?;
    }
    for x in &full {
        let f = one.try_sub(&x.try_mul(&qinv)?)?;
        den = den.try_mul(&nonzero(f)?)?;
    }
    Ok(num.try_div(&den)?)
}

fn nonzero(f: SymRat) -> Result<SymRat, LocalError> {
    if f.is_zero() {
        Err(crate::exact_algebra::AlgebraError::Pole("a factor of C vanishes".into()).into())
    } else {
        Ok(f)
    }
}

/// `J(φ, Λ)` for the spherical vector.
///
/// For type I this is `C·(J₀(1) + l·J₀(t_K))`; for IIb the parameters are
/// replaced by those of `χ1_{GL(2)} ⋊ χ⁻¹` (see [`SatakeParams::iib`]), `l`
/// is forced to `+1`, and the returned value is `J* = 2·C·(J₀(1) + J₀(t_K))`.
pub fn j_spherical_ramified(
    p: &SatakeParams,
    repr: SphericalType,
    l: Sign,
) -> Result<SymRat, LocalError> {
    let l = match repr {
        SphericalType::I => l,
        SphericalType::IIb => Sign::Plus,
    };
    let c = norm_const_ramified(p, l)?;
    let triv = j0_spherical_ramified(p, TorusRep::Trivial)?;
    let tk = j0_spherical_ramified(p, TorusRep::TK)?;
    let inner = triv.try_add(&tk.scale(&crate::exact_algebra::int(l.as_i64())))?;
    let j = c.try_mul(&inner)?;
    Ok(match repr {
        SphericalType::I => j,
        SphericalType::IIb => j.scale(&crate::exact_algebra::int(2)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_i_both_signs() {
        let p = SatakeParams::generic();
        for l in [Sign::Plus, Sign::Minus] {
            let j = j_spherical_ramified(&p, SphericalType::I, l).unwrap();
            assert!(j.eq_exact(&SymRat::one()).unwrap(), "l = {l}: {j}");
        }
    }

    #[test]
    fn iib_gives_two() {
        let p = SatakeParams::iib();
        let j = j_spherical_ramified(&p, SphericalType::IIb, Sign::Plus).unwrap();
        assert!(j.eq_exact(&SymRat::int(2)).unwrap(), "{j}");
    }

    #[test]
    fn constant_sign_flip_is_gamma_flip() {
        let p = SatakeParams::generic();
        let flipped = SatakeParams::new(
            p.sqrt_q().clone(),
            p.alpha().clone(),
            p.beta().clone(),
            p.gamma().neg(),
        )
        .unwrap();
        let a = norm_const_ramified(&p, Sign::Minus).unwrap();
        let b = norm_const_ramified(&flipped, Sign::Plus).unwrap();
        assert!(a.eq_exact(&b).unwrap());
    }
}
