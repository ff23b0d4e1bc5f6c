//! `J₀` and `J` for `P₁`-fixed vectors in Iwahori-spherical representations,
//! for `K/F` unramified and `Λ` trivial.
//!
//! `J₀(φ) = 1 − (q+1)q⁻³λ(φ) + q⁻²μ(φ)` where `λ, μ` are the normalized matrix
//! coefficients of `d₁e₁e₀e₁` and `d₁e₀e₁e₀` at `φ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{spin_adjoint_factors, LocalError, SatakeParams, Sign};
use crate::exact_algebra::{BigRat, SymRat};

/// Iwahori-spherical representation types of GSp(4) with trivial central
/// character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReprType {
    I,
    IIa,
    IIb,
    IIIa,
    IIIb,
    IVa,
    IVb,
    IVc,
    IVd,
    Va,
    Vb,
    Vc,
    Vd,
    VIa,
    VIb,
    VIc,
    VId,
}

impl ReprType {
    pub const ALL: [ReprType; 17] = [
        ReprType::I,
        ReprType::IIa,
        ReprType::IIb,
        ReprType::IIIa,
        ReprType::IIIb,
        ReprType::IVa,
        ReprType::IVb,
        ReprType::IVc,
        ReprType::IVd,
        ReprType::Va,
        ReprType::Vb,
        ReprType::Vc,
        ReprType::Vd,
        ReprType::VIa,
        ReprType::VIb,
        ReprType::VIc,
        ReprType::VId,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReprType::I => "I",
            ReprType::IIa => "IIa",
            ReprType::IIb => "IIb",
            ReprType::IIIa => "IIIa",
            ReprType::IIIb => "IIIb",
            ReprType::IVa => "IVa",
            ReprType::IVb => "IVb",
            ReprType::IVc => "IVc",
            ReprType::IVd => "IVd",
            ReprType::Va => "Va",
            ReprType::Vb => "Vb",
            ReprType::Vc => "Vc",
            ReprType::Vd => "Vd",
            ReprType::VIa => "VIa",
            ReprType::VIb => "VIb",
            ReprType::VIc => "VIc",
            ReprType::VId => "VId",
        }
    }
}

impl fmt::Display for ReprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReprType {
    type Err = LocalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReprType::ALL
            .into_iter()
            .find(|r| r.name() == s.trim())
            .ok_or_else(|| LocalError::UnknownRepr(s.to_string()))
    }
}

/// A representation type with its genericity and the dimensions of its
/// `P₁`- and `G(o)`-fixed subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReprClass {
    pub tag: ReprType,
    pub generic: bool,
    pub dim_p1: u8,
    pub dim_k: u8,
}

impl ReprClass {
    pub fn of(tag: ReprType) -> Self {
        use ReprType::*;
        let (generic, dim_p1, dim_k) = match tag {
            I => (true, 4, 1),
            IIa => (true, 1, 0),
            IIb => (false, 3, 1),
            IIIa => (true, 2, 0),
            IIIb => (false, 2, 1),
            IVa => (true, 0, 0),
            IVb => (false, 2, 0),
            IVc => (false, 1, 0),
            IVd => (false, 1, 1),
            Va => (true, 0, 0),
            Vb => (false, 1, 0),
            Vc => (false, 1, 0),
            Vd => (false, 2, 1),
            VIa => (true, 1, 0),
            VIb => (false, 1, 0),
            VIc => (false, 0, 0),
            VId => (false, 2, 1),
        };
        Self { tag, generic, dim_p1, dim_k }
    }

    pub fn is_spherical(&self) -> bool {
        self.dim_k > 0
    }
}

/// A member of the chosen orthogonal basis of `P₁`-fixed vectors.
///
/// For type I the indices 1..4 name the vectors supported on
/// `{e, s₁}, {s₂, s₂s₁}, {s₁s₂, s₁s₂s₁}, {s₂s₁s₂, s₁s₂s₁s₂}` in the Iwahori
/// basis; for IIIa the two vectors of the realization inside
/// `χ × ν ⋊ ν^{-1/2}σ`; otherwise the unique vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct P1Vector {
    repr: ReprClass,
    index: u8,
}

impl P1Vector {
    pub fn new(tag: ReprType, index: u8) -> Result<Self, LocalError> {
        let repr = ReprClass::of(tag);
        if repr.dim_p1 == 0 {
            return Err(LocalError::NoP1Vector(tag));
        }
        if index == 0 || index > repr.dim_p1 {
            return Err(LocalError::UnknownVector { repr: tag, index });
        }
        Ok(Self { repr, index })
    }

    pub fn repr(&self) -> ReprClass {
        self.repr
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    /// The seven `(type, vector)` rows covered by the local theorem.
    pub fn table_rows() -> Vec<P1Vector> {
        use ReprType::*;
        [(I, 1), (I, 2), (I, 3), (I, 4), (IIIa, 1), (IIIa, 2), (VIb, 1), (IIa, 1), (Vb, 1), (Vc, 1), (VIa, 1)]
            .into_iter()
            .map(|(t, i)| P1Vector::new(t, i).expect("table rows are valid"))
            .collect()
    }
}

impl fmt::Display for P1Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} φ{}", self.repr.tag, self.index)
    }
}

/// `J₀` and `J` for one vector.
#[derive(Clone, Debug)]
pub struct LocalFactorResult {
    pub j0: SymRat,
    pub j: SymRat,
    pub repr: ReprClass,
    pub vector: P1Vector,
    /// `Λ(ϖ_K)` for unramified `Λ`; `None` when not applicable.
    pub lambda_value: Option<Sign>,
}

fn q() -> SymRat {
    SymRat::q()
}

fn qpow(e: i32) -> SymRat {
    SymRat::q_half_pow(2 * e)
}

/// `(λ(φ), μ(φ))` for the supported vectors.
pub fn lambda_mu(v: &P1Vector) -> Result<(SymRat, SymRat), LocalError> {
    use ReprType::*;
    let q = q();
    let one = SymRat::one();
    let q_minus_1 = q.try_sub(&one)?;
    let q_plus_1 = q.try_add(&one)?;
    let q2 = qpow(2);
    let a = q_minus_1.try_mul(&q2)?; // (q−1)q²
    let b = a.try_div(&q_plus_1)?; // (q−1)q²/(q+1)
    let zero = SymRat::zero();
    let out = match (v.repr.tag, v.index) {
        (I, 1) => (a.clone(), a),
        (I, 2) => (b, q_minus_1.try_mul(&q)?),
        (I, 3) => (b, zero),
        (I, 4) => (zero.clone(), zero),
        (IIIa, 1 | 2) => (q2.try_div(&q_plus_1)?.neg(), zero),
        (VIb, 1) => (q2.neg(), q),
        (IIa | Vb | Vc | VIa, 1) => (b, q.neg()),
        (tag, index) => return Err(LocalError::UnknownVector { repr: tag, index }),
    };
    Ok(out)
}

/// `J₀(φ) = 1 − (q+1)q⁻³λ(φ) + q⁻²μ(φ)`.
pub fn j0_p1(v: &P1Vector) -> Result<SymRat, LocalError> {
    let (lambda, mu) = lambda_mu(v)?;
    let q_plus_1 = q().try_add(&SymRat::one())?;
    Ok(SymRat::one()
        .try_sub(&q_plus_1.try_mul(&qpow(-3))?.try_mul(&lambda)?)?
        .try_add(&qpow(-2).try_mul(&mu)?)?)
}

/// `J(φ) = M(π)·J₀(φ)`.
///
/// For type I, `M(π) = L(1, Ad)L(1, χ_{K/F}) / (ζ(2)ζ(4)L(1/2, π × AI(1)))`
/// is computed from the Satake parameters and checked against
/// `L(1, π, Std)(1 − q⁻⁴)`; a mismatch is reported as an internal identity
/// failure. For IIIa and VIb, `M(π) = 1 + q⁻²`. The remaining types have
/// `J₀ = 0`.
pub fn j_p1(v: &P1Vector, p: &SatakeParams) -> Result<LocalFactorResult, LocalError> {
    use ReprType::*;
    let j0 = j0_p1(v)?;
    let m = match v.repr.tag {
        I => type_i_normalizer(p)?,
        IIIa | VIb => SymRat::one().try_add(&qpow(-2))?,
        _ => {
            if !j0.is_zero() {
                return Err(LocalError::IdentityFailure(format!("J₀ of {v} should vanish")));
            }
            SymRat::zero()
        }
    };
    let j = m.try_mul(&j0)?;
    Ok(LocalFactorResult { j0, j, repr: v.repr, vector: *v, lambda_value: Some(Sign::Plus) })
}

/// `M(π)` for type I, verified against `L(1, π, Std)(1 − q⁻⁴)`.
fn type_i_normalizer(p: &SatakeParams) -> Result<SymRat, LocalError> {
    let one = SymRat::one();
    let at_one = spin_adjoint_factors(p, &BigRat::from_integer(1.into()))?;
    let at_half = spin_adjoint_factors(p, &BigRat::new(1.into(), 2.into()))?;
    let qinv = p.q().inv()?;
    let q2inv = qinv.try_mul(&qinv)?;
    let q4inv = q2inv.try_mul(&q2inv)?;
    // L(1, χ_{K/F}) = (1 + q⁻¹)⁻¹, ζ(2)⁻¹ζ(4)⁻¹ = (1 − q⁻²)(1 − q⁻⁴)
    let l_chi = one.try_add(&qinv)?.inv()?;
    let zeta_inv = one.try_sub(&q2inv)?.try_mul(&one.try_sub(&q4inv)?)?;
    let l_half = at_half.spin.try_mul(&at_half.spin_twisted)?;
    let m = at_one
        .adjoint
        .try_mul(&l_chi)?
        .try_mul(&zeta_inv)?
        .try_div(&l_half)?;
    let expected = at_one.standard.try_mul(&one.try_sub(&q4inv)?)?;
    if !m.eq_exact(&expected)? {
        return Err(LocalError::IdentityFailure(
            "M(π) ≠ L(1, π, Std)(1 − q⁻⁴) for type I".into(),
        ));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(a: &SymRat, b: &SymRat) -> bool {
        a.eq_exact(b).unwrap()
    }

    #[test]
    fn table_of_representations() {
        let c = ReprClass::of(ReprType::I);
        assert_eq!((c.generic, c.dim_p1, c.dim_k), (true, 4, 1));
        let c = ReprClass::of(ReprType::VIb);
        assert_eq!((c.generic, c.dim_p1, c.dim_k), (false, 1, 0));
        assert_eq!("IIIa".parse::<ReprType>().unwrap(), ReprType::IIIa);
        assert!("VII".parse::<ReprType>().is_err());
        assert!(P1Vector::new(ReprType::IVa, 1).is_err());
        assert!(P1Vector::new(ReprType::I, 5).is_err());
    }

    #[test]
    fn j0_column() {
        let qinv = qpow(-1);
        let one = SymRat::one();
        let one_plus = one.try_add(&qinv).unwrap();
        let cases = [
            (ReprType::I, 1, qinv.clone()),
            (ReprType::I, 2, one.clone()),
            (ReprType::I, 3, qinv.clone()),
            (ReprType::I, 4, one.clone()),
            (ReprType::IIIa, 1, one_plus.clone()),
            (ReprType::IIIa, 2, one_plus.clone()),
            (ReprType::VIb, 1, one_plus.scale(&crate::exact_algebra::int(2))),
            (ReprType::IIa, 1, SymRat::zero()),
            (ReprType::VIa, 1, SymRat::zero()),
        ];
        for (t, i, want) in cases {
            let got = j0_p1(&P1Vector::new(t, i).unwrap()).unwrap();
            assert!(eq(&got, &want), "{t} φ{i}: {got}");
        }
    }

    #[test]
    fn type_i_identity_holds() {
        let p = SatakeParams::generic();
        let r = j_p1(&P1Vector::new(ReprType::I, 2).unwrap(), &p).unwrap();
        let std = spin_adjoint_factors(&p, &BigRat::from_integer(1.into())).unwrap().standard;
        let want = std.try_mul(&SymRat::one().try_sub(&qpow(-4)).unwrap()).unwrap();
        assert!(eq(&r.j, &want));
    }
}
