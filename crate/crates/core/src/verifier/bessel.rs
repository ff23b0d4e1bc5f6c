//! Class-group-weighted sums of Siegel Fourier coefficients.

use crate::exact_algebra::{BigRat, Cyclo};
use crate::modforms::SiegelCoefficients;
use crate::quadfields::{ClassCharacter, QuadClassGroup};

use super::VerifierError;

/// `R(f, K, Λ) = Σ_{c ∈ Cl_K} a(f, S_c)·Λ⁻¹(c)`, with `S_c` the reduced
/// representatives of the classes.
#[derive(Clone, Debug, PartialEq)]
pub struct BesselSum {
    pub disc: i64,
    /// `Λ(gᵢ)` exponents identifying the character.
    pub character: Vec<u64>,
    pub value: Cyclo,
}

impl BesselSum {
    /// The complex embedding `ζ_e ↦ e^{2πi/e}`.
    pub fn to_complex(&self) -> (f64, f64) {
        self.value.to_complex()
    }
}

/// `Σ_c a_c·Λ⁻¹(c)` for coefficients listed in class order.
pub fn bessel_sum_from_values(g: &QuadClassGroup, chi: &ClassCharacter, a: &[BigRat]) -> BesselSum {
    assert_eq!(a.len(), g.order(), "one coefficient per class");
    let e = g.exponent() as u32;
    let mut value = Cyclo::zero(e);
    for (c, ac) in a.iter().enumerate() {
        // Λ⁻¹(c) = conj Λ(c) for a unitary character
        value = value.add(&chi.value(c).conj().scale(ac));
    }
    BesselSum { disc: g.disc(), character: chi.exponents.clone(), value }
}

/// `R(f, K, Λ)` with coefficients drawn from `f`.
pub fn bessel_sum<F: SiegelCoefficients + ?Sized>(
    f: &F,
    g: &QuadClassGroup,
    chi: &ClassCharacter,
) -> Result<BesselSum, VerifierError> {
    let a = g
        .classes()
        .iter()
        .map(|&s| f.coefficient(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(bessel_sum_from_values(g, chi, &a))
}
