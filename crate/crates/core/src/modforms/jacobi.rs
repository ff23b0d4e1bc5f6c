//! Jacobi forms of index 1 through their theta-decomposition coefficients
//! `e(D)`, `D = 4n − r²`, which are also the coefficients of the attached
//! Kohnen plus-space form of weight `k − 1/2`; and their Saito–Kurokawa
//! lifts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bernoulli::cohen_number;
use super::qexp::{eisenstein, QExpansion};
use super::ModFormError;
use crate::exact_algebra::{int, BigRat};
use crate::quadfields::QuadForm;

/// Coefficients `c(D)` for `0 ≤ D ≤ d_max`, `D ≡ 0, 3 (mod 4)`, of an
/// index-1 Jacobi form of weight `k` (equivalently a plus-space form of
/// weight `k − 1/2`).
#[derive(Clone, Debug, PartialEq)]
pub struct KohnenForm {
    pub weight: i64,
    pub d_max: u64,
    coeffs: BTreeMap<u64, BigRat>,
}

impl KohnenForm {
    /// Build from explicit coefficients; missing admissible `D ≤ d_max` are
    /// zero and inadmissible keys are rejected.
    pub fn new(weight: i64, d_max: u64, coeffs: BTreeMap<u64, BigRat>) -> Result<Self, ModFormError> {
        if let Some((&d, _)) = coeffs.iter().find(|(&d, _)| !admissible(d) || d > d_max) {
            return Err(ModFormError::BadDiscriminant(d));
        }
        Ok(Self { weight, d_max, coeffs })
    }

    /// `c(D)`; zero for `D ≡ 1, 2 (mod 4)`.
    pub fn c(&self, d: u64) -> Result<BigRat, ModFormError> {
        if d > self.d_max {
            return Err(ModFormError::PrecisionExceeded { needed: d, available: self.d_max });
        }
        Ok(self.coeffs.get(&d).cloned().unwrap_or_else(BigRat::zero))
    }

    /// Nonzero coefficients in increasing `D`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigRat)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    /// The Jacobi coefficient `c(n, r) = e(4n − r²)`.
    pub fn jacobi_coefficient(&self, n: u64, r: i64) -> Result<BigRat, ModFormError> {
        let d = 4 * n as i64 - r * r;
        if d < 0 {
            return Ok(BigRat::zero());
        }
        self.c(d as u64)
    }

    /// `φ(τ, 0) = Σ_n (Σ_r c(n, r)) qⁿ`, a modular form of weight `k`.
    pub fn restriction_to_zero(&self, len: usize) -> Result<QExpansion, ModFormError> {
        let mut coeffs = Vec::with_capacity(len);
        for n in 0..len as u64 {
            let mut s = BigRat::zero();
            let mut r = 0i64;
            while r * r <= 4 * n as i64 {
                let c = self.jacobi_coefficient(n, r)?;
                s += if r == 0 { c } else { c * int(2) };
                r += 1;
            }
            coeffs.push(s);
        }
        Ok(QExpansion::new(self.weight, 1, coeffs))
    }
}

fn admissible(d: u64) -> bool {
    matches!(d % 4, 0 | 3)
}

/// `E_{k,1}`: `e(D) = H(k−1, D)/H(k−1, 0)`.
fn jacobi_eisenstein(k: i64, d_max: u64) -> KohnenForm {
    let r = (k - 1) as u32;
    let h0 = cohen_number(r, 0);
    let coeffs = (0..=d_max)
        .filter(|&d| admissible(d))
        .map(|d| (d, cohen_number(r, d) / &h0))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    KohnenForm { weight: k, d_max, coeffs }
}

/// `f(τ)·φ(τ, z)` in theta coefficients: `Σ_j a(j)·e(D − 4j)`.
fn times_modular(f: &QExpansion, phi: &KohnenForm) -> KohnenForm {
    let mut coeffs = BTreeMap::new();
    for d in (0..=phi.d_max).filter(|&d| admissible(d)) {
        let mut s = BigRat::zero();
        for j in 0..=d / 4 {
            let a = &f.coeffs[j as usize];
            if let Some(e) = phi.coeffs.get(&(d - 4 * j)) {
                s += a * e;
            }
        }
        if !s.is_zero() {
            coeffs.insert(d, s);
        }
    }
    KohnenForm { weight: f.weight + phi.weight, d_max: phi.d_max, coeffs }
}

fn combine(x: &KohnenForm, y: &KohnenForm, scale: &BigRat) -> KohnenForm {
    let mut coeffs = BTreeMap::new();
    for d in (0..=x.d_max).filter(|&d| admissible(d)) {
        let v = (x.c(d).unwrap() - y.c(d).unwrap()) * scale;
        if !v.is_zero() {
            coeffs.insert(d, v);
        }
    }
    KohnenForm { weight: x.weight, d_max: x.d_max, coeffs }
}

/// Index-1 Jacobi forms of weight 4, 6 (Eisenstein) and 10, 12 (the cusp
/// forms `φ₁₀,₁ = (E₆E₄,₁ − E₄E₆,₁)/144`, `φ₁₂,₁ = (E₄²E₄,₁ − E₆E₆,₁)/144`).
pub fn jacobi_index1(k: i64, d_max: u64) -> Result<KohnenForm, ModFormError> {
    match k {
        4 | 6 => Ok(jacobi_eisenstein(k, d_max)),
        10 | 12 => {
            let len = (d_max / 4 + 1) as usize;
            let e41 = jacobi_eisenstein(4, d_max);
            let e61 = jacobi_eisenstein(6, d_max);
            let e4 = eisenstein(4, len)?;
            let e6 = eisenstein(6, len)?;
            let (x, y) = if k == 10 {
                (times_modular(&e6, &e41), times_modular(&e4, &e61))
            } else {
                (times_modular(&e4.mul(&e4), &e41), times_modular(&e6, &e61))
            };
            let phi = combine(&x, &y, &BigRat::new(BigInt::one(), BigInt::from(144)));
            if !phi.c(0)?.is_zero() || phi.coeffs.values().any(|c| !c.is_integer()) {
                return Err(ModFormError::Internal(format!("φ_{k},1 is not an integral cusp form")));
            }
            Ok(phi)
        }
        _ => Err(ModFormError::UnsupportedWeight(k)),
    }
}

/// The Saito–Kurokawa lift of an index-1 Jacobi cusp form of weight `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SKLift {
    pub kohnen: KohnenForm,
}

impl SKLift {
    pub fn new(kohnen: KohnenForm) -> Self {
        Self { kohnen }
    }

    pub fn weight(&self) -> i64 {
        self.kohnen.weight
    }
}

/// `a(F, T) = Σ_{r | gcd(a, b, c)} r^{k−1} c(|disc T|/r²)` for
/// `T = [[a, b/2], [b/2, c]]` positive definite.
pub fn sk_coefficient(f: &SKLift, t: QuadForm) -> Result<BigRat, ModFormError> {
    if !t.is_positive_definite() {
        return Err(ModFormError::NotPositiveDefinite(t));
    }
    let disc = (-t.disc()) as u64;
    let g = t.content() as u64;
    let k = f.weight();
    let mut s = BigRat::zero();
    for r in (1..=g).filter(|r| g.is_multiple_of(*r)) {
        let c = f.kohnen.c(disc / (r * r))?;
        s += c * BigRat::from_integer(num_traits::pow(BigInt::from(r), (k - 1) as usize));
    }
    Ok(s)
}

/// A source of Siegel Fourier coefficients `a(F, T)`.
pub trait SiegelCoefficients {
    fn weight(&self) -> i64;
    fn coefficient(&self, t: QuadForm) -> Result<BigRat, ModFormError>;
}

impl SiegelCoefficients for SKLift {
    fn weight(&self) -> i64 {
        SKLift::weight(self)
    }

    fn coefficient(&self, t: QuadForm) -> Result<BigRat, ModFormError> {
        sk_coefficient(self, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modforms::qexp::delta;

    #[test]
    fn eisenstein_values() {
        let e = jacobi_index1(4, 20).unwrap();
        assert_eq!(e.c(0).unwrap(), int(1));
        assert_eq!(e.c(3).unwrap(), int(56));
        assert_eq!(e.c(4).unwrap(), int(126));
        assert_eq!(e.c(5).unwrap(), int(0));
        assert!(e.c(21).is_err());
        let e = jacobi_index1(6, 8).unwrap();
        assert_eq!(e.c(3).unwrap(), int(-88));
        assert_eq!(e.c(4).unwrap(), int(-330));
    }

    #[test]
    fn cusp_values() {
        let phi = jacobi_index1(10, 40).unwrap();
        assert_eq!(phi.c(0).unwrap(), int(0));
        assert_eq!(phi.c(3).unwrap(), int(1));
        assert_eq!(phi.c(4).unwrap(), int(-2));
        let phi = jacobi_index1(12, 40).unwrap();
        assert_eq!(phi.c(3).unwrap(), int(1));
        assert_eq!(phi.c(4).unwrap(), int(10));
        assert!(jacobi_index1(8, 10).is_err());
    }

    #[test]
    fn restrictions_are_modular() {
        let e = jacobi_index1(4, 80).unwrap();
        assert_eq!(e.restriction_to_zero(20).unwrap(), eisenstein(4, 20).unwrap());
        let phi = jacobi_index1(10, 80).unwrap();
        assert!(phi.restriction_to_zero(20).unwrap().coeffs.iter().all(|c| c.is_zero()));
        let phi = jacobi_index1(12, 80).unwrap();
        assert_eq!(phi.restriction_to_zero(20).unwrap().coeffs, delta(20).scale(&int(12)).coeffs);
    }

    #[test]
    fn sk_divisor_sum() {
        let f = SKLift::new(jacobi_index1(10, 40).unwrap());
        assert_eq!(sk_coefficient(&f, QuadForm::new(1, 1, 1)).unwrap(), int(1));
        let want = f.kohnen.c(16).unwrap() + int(512) * f.kohnen.c(4).unwrap();
        assert_eq!(sk_coefficient(&f, QuadForm::new(2, 0, 2)).unwrap(), want);
        assert_eq!(
            sk_coefficient(&f, QuadForm::new(2, 1, 3)).unwrap(),
            sk_coefficient(&f, QuadForm::new(3, 1, 2)).unwrap()
        );
        assert!(sk_coefficient(&f, QuadForm::new(1, 3, 1)).is_err());
    }
}
