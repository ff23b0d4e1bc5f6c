//! Macdonald's formula for the normalized spherical matrix coefficient
//! `Φ₀(h(ℓ,m))` of an unramified principal series of GSp(4).

use num_complex::Complex64;

use super::{CosetIndex, LocalError, NumericSatake, SatakeParams};
use crate::exact_algebra::{AlgebraError, SymRat};

/// The arithmetic the formula needs, shared by the exact and floating paths.
trait Field: Clone {
    fn one() -> Self;
    fn add(&self, o: &Self) -> Result<Self, LocalError>;
    fn sub(&self, o: &Self) -> Result<Self, LocalError>;
    fn mul(&self, o: &Self) -> Result<Self, LocalError>;
    fn div(&self, o: &Self) -> Result<Self, LocalError>;
    fn powi(&self, e: i32) -> Result<Self, LocalError>;
}

impl Field for SymRat {
    fn one() -> Self {
        SymRat::one()
    }
    fn add(&self, o: &Self) -> Result<Self, LocalError> {
        Ok(self.try_add(o)?)
    }
    fn sub(&self, o: &Self) -> Result<Self, LocalError> {
        Ok(self.try_sub(o)?)
    }
    fn mul(&self, o: &Self) -> Result<Self, LocalError> {
        Ok(self.try_mul(o)?)
    }
    fn div(&self, o: &Self) -> Result<Self, LocalError> {
        if o.is_zero() {
            return Err(AlgebraError::Pole(format!("Macdonald denominator {o} vanishes")).into());
        }
        Ok(self.try_div(o)?)
    }
    fn powi(&self, e: i32) -> Result<Self, LocalError> {
        Ok(self.pow(e)?)
    }
}

impl Field for Complex64 {
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, o: &Self) -> Result<Self, LocalError> {
        Ok(self + o)
    }
    fn sub(&self, o: &Self) -> Result<Self, LocalError> {
        Ok(self - o)
    }
    fn mul(&self, o: &Self) -> Result<Self, LocalError> {
        Ok(self * o)
    }
    fn div(&self, o: &Self) -> Result<Self, LocalError> {
        Ok(self / o)
    }
    fn powi(&self, e: i32) -> Result<Self, LocalError> {
        Ok(Complex64::powi(self, e))
    }
}

/// Exponents `(a, b)` of the four arguments `x = α^a β^b` entering each
/// `A_i = Π (1 − q⁻¹x)/(1 − x)`.
const A_ARGS: [[(i32, i32); 4]; 8] = [
    [(-1, 1), (0, -1), (-1, -1), (-1, 0)],
    [(1, -1), (-1, 0), (-1, -1), (0, -1)],
    [(-1, -1), (0, 1), (-1, 1), (-1, 0)],
    [(1, 1), (-1, 0), (-1, 1), (0, 1)],
    [(-1, -1), (1, 0), (1, -1), (0, -1)],
    [(1, 1), (0, -1), (1, -1), (1, 0)],
    [(-1, 1), (1, 0), (1, 1), (0, 1)],
    [(1, -1), (0, 1), (1, 1), (1, 0)],
];

/// Exponents of `α` and `β` in `B_i / γ^{2m+ℓ}`.
fn b_exponents(i: usize, l: i32, m: i32) -> (i32, i32) {
    match i {
        0 => (2 * m + l, m + l),
        1 => (m + l, 2 * m + l),
        2 => (2 * m + l, m),
        3 => (m + l, 0),
        4 => (m, 2 * m + l),
        5 => (0, m + l),
        6 => (m, 0),
        7 => (0, m),
        _ => unreachable!(),
    }
}

/// `Φ₀(h(ℓ,m))` from `α, β, γ`, `q^{1/2}` in any field.
///
/// The prefactor is `δ^{1/2}(h(ℓ,m)) = q^{-(4m+3ℓ)/2}`; with it `Φ₀` is 1 on
/// `h(0,0)` and matches the trivial representation, whose Satake parameters
/// are `(q⁻², q⁻¹, q^{3/2})`.
fn phi0<F: Field>(r: &F, alpha: &F, beta: &F, gamma: &F, c: CosetIndex) -> Result<F, LocalError> {
    let l = c.ell as i32;
    let m = c.m as i32;
    let one = F::one();
    let q = r.mul(r)?;
    let qinv = one.div(&q)?;
    let a_pows: Vec<F> = (-1..=1).map(|e| alpha.powi(e)).collect::<Result<_, _>>()?;
    let b_pows: Vec<F> = (-1..=1).map(|e| beta.powi(e)).collect::<Result<_, _>>()?;
    let mono = |a: i32, b: i32| a_pows[(a + 1) as usize].mul(&b_pows[(b + 1) as usize]);

    let mut sum: Option<F> = None;
    for (i, args) in A_ARGS.iter().enumerate() {
        let mut term = one.clone();
        for &(a, b) in args {
            let x = mono(a, b)?;
            let num = one.sub(&x.mul(&qinv)?)?;
            let den = one.sub(&x)?;
            term = term.mul(&num)?.div(&den)?;
        }
        let (ea, eb) = b_exponents(i, l, m);
        term = term.mul(&alpha.powi(ea)?)?.mul(&beta.powi(eb)?)?;
        sum = Some(match sum {
            None => term,
            Some(s) => s.add(&term)?,
        });
    }
    let sum = sum.expect("eight terms").mul(&gamma.powi(2 * m + l)?)?;

    // 1 + 2q⁻¹ + 2q⁻² + 2q⁻³ + q⁻⁴
    let two = one.add(&one)?;
    let mut norm = one.clone();
    let mut qk = one.clone();
    for k in 1..=4 {
        qk = qk.mul(&qinv)?;
        let coeff = if k == 4 { one.clone() } else { two.clone() };
        norm = norm.add(&coeff.mul(&qk)?)?;
    }
    let pref = r.powi(-(4 * m + 3 * l))?;
    pref.mul(&sum)?.div(&norm)
}

/// Normalized spherical matrix coefficient `Φ₀(h(ℓ,m))`, exact.
pub fn macdonald_phi0(p: &SatakeParams, c: CosetIndex) -> Result<SymRat, LocalError> {
    phi0(p.sqrt_q(), p.alpha(), p.beta(), p.gamma(), c)
}

/// Normalized spherical matrix coefficient in floating point.
pub fn macdonald_phi0_numeric(p: &NumericSatake, c: CosetIndex) -> Result<Complex64, LocalError> {
    let r = Complex64::new(p.q.sqrt(), 0.0);
    phi0(&r, &p.alpha, &p.beta, &p.gamma, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{rat, SymRat};

    #[test]
    fn identity_coset_is_one() {
        let p = SatakeParams::generic();
        let v = macdonald_phi0(&p, CosetIndex::new(0, 0)).unwrap();
        assert!(v.eq_exact(&SymRat::one()).unwrap(), "{v}");
        let p = SatakeParams::rational(SymRat::int(3), rat(2, 1), rat(5, 1)).unwrap();
        let v = macdonald_phi0(&p, CosetIndex::new(0, 0)).unwrap();
        assert_eq!(v.as_constant(), Some(rat(1, 1)));
    }

    #[test]
    fn trivial_representation_is_constant_one() {
        // Satake parameters of the trivial representation: (q⁻², q⁻¹, q^{3/2})
        let p = SatakeParams::new(
            SymRat::sqrt_q(),
            SymRat::q_half_pow(-4),
            SymRat::q_half_pow(-2),
            SymRat::q_half_pow(3),
        )
        .unwrap();
        for (l, m) in [(0, 1), (1, 0), (1, 1), (2, 1), (3, 0)] {
            let v = macdonald_phi0(&p, CosetIndex::new(l, m)).unwrap();
            assert!(v.eq_exact(&SymRat::one()).unwrap(), "h({l},{m}): {v}");
        }
    }

    #[test]
    fn weyl_symmetry_small() {
        let p = SatakeParams::generic();
        let c = CosetIndex::new(1, 1);
        let v = macdonald_phi0(&p, c).unwrap();
        let w = macdonald_phi0(&p.swap_alpha_beta(), c).unwrap();
        assert!(v.eq_exact(&w).unwrap());
        let w = macdonald_phi0(&p.reflect_beta().unwrap(), c).unwrap();
        assert!(v.eq_exact(&w).unwrap());
    }

    #[test]
    fn numeric_matches_exact() {
        let p = SatakeParams::rational(SymRat::int(3), rat(2, 1), rat(5, 1)).unwrap();
        let n = NumericSatake::from_alpha_beta(9.0, Complex64::new(2.0, 0.0), Complex64::new(5.0, 0.0)).unwrap();
        for (l, m) in [(0, 2), (2, 1), (1, 0)] {
            let c = CosetIndex::new(l, m);
            let exact = macdonald_phi0(&p, c).unwrap().to_f64(1.0).unwrap();
            let float = macdonald_phi0_numeric(&n, c).unwrap();
            assert!((float.re - exact).abs() < 1e-12 * exact.abs().max(1.0), "{c}: {float} vs {exact}");
            assert!(float.im.abs() < 1e-12);
        }
    }
}
