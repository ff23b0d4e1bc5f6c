//! Fractions of Laurent polynomials with a factored denominator.
//!
//! Denominators are kept as a product of normalized factors. No multivariate
//! gcd is ever taken: sums use the factorwise lcm of the two denominators and
//! equality is decided by cross-multiplication.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{Mono, Poly};
use super::{AlgebraError, BigRat};

/// A normalized denominator factor: no monomial content, leading coefficient 1,
/// not constant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Factor(Poly);

impl Factor {
    pub fn poly(&self) -> &Poly {
        &self.0
    }
}

/// Split `p` into `unit * factor` where `unit` is a monomial with rational
/// coefficient. Returns `None` for the factor part when `p` is itself a unit.
fn normalize(p: &Poly) -> (Mono, BigRat, Option<Factor>) {
    debug_assert!(!p.is_zero());
    let shift = p.min_exponents();
    let neg_shift = shift.map(|e| -e);
    let shifted = p.shift(&neg_shift);
    let lead = shifted.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigRat::one);
    let monic = shifted.scale(&lead.recip());
    if monic.is_one() {
        (shift, lead, None)
    } else {
        (shift, lead, Some(Factor(monic)))
    }
}

#[derive(Clone)]
pub struct Frac {
    num: Poly,
    den: Vec<(Factor, u32)>,
}

impl Frac {
    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        Self { num, den: Vec::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(Factor, u32)] {
        &self.den
    }

    /// Expanded denominator.
    pub fn den(&self) -> Poly {
        self.den
            .iter()
            .fold(Poly::one(), |acc, (f, e)| &acc * &f.0.pow(*e))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        if self.num.is_zero() {
            return Some(BigRat::zero());
        }
        if self.den.is_empty() {
            return self.num.as_constant();
        }
        // a constant multiple of the expanded denominator
        let d = self.den();
        let (_, nl) = self.num.leading()?;
        let (_, dl) = d.leading()?;
        let c = nl / dl;
        if self.num == d.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// `n / d` with `d` nonzero.
    pub fn ratio(n: Poly, d: &Poly) -> Result<Self, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (shift, lead, factor) = normalize(d);
        let num = n.shift(&shift.map(|e| -e)).scale(&lead.recip());
        let den = factor.map(|f| vec![(f, 1)]).unwrap_or_default();
        Ok(Self { num, den }.trimmed())
    }

    fn lcm_den(&self, other: &Frac) -> Vec<(Factor, u32)> {
        let mut out = self.den.clone();
        for (f, e) in &other.den {
            match out.iter_mut().find(|(g, _)| g == f) {
                Some((_, e0)) => *e0 = (*e0).max(*e),
                None => out.push((f.clone(), *e)),
            }
        }
        out
    }

    /// Numerator rescaled to sit over the (larger) denominator `target`.
    fn lift_num(&self, target: &[(Factor, u32)]) -> Poly {
        let mut num = self.num.clone();
        for (f, e) in target {
            let have = self.den.iter().find(|(g, _)| g == f).map_or(0, |(_, e)| *e);
            if *e > have {
                num = &num * &f.0.pow(e - have);
            }
        }
        num
    }

    pub fn add(&self, other: &Frac) -> Frac {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let den = self.lcm_den(other);
        let num = &self.lift_num(&den) + &other.lift_num(&den);
        Frac { num, den }.trimmed()
    }

    pub fn neg(&self) -> Frac {
        Frac { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        if self.is_zero() || other.is_zero() {
            return Frac::zero();
        }
        let mut den = self.den.clone();
        for (f, e) in &other.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some((_, e0)) => *e0 += e,
                None => den.push((f.clone(), *e)),
            }
        }
        Frac { num: &self.num * &other.num, den }.trimmed()
    }

    pub fn scale(&self, c: &BigRat) -> Frac {
        Frac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> Frac {
        Frac { num: &self.num * p, den: self.den.clone() }.trimmed()
    }

    pub fn inv(&self) -> Result<Frac, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Frac::ratio(self.den(), &self.num)
    }

    pub fn div(&self, other: &Frac) -> Result<Frac, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Frac, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Frac::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact equality by cross-multiplication.
    pub fn eq_exact(&self, other: &Frac) -> bool {
        self.sub(other).is_zero()
    }

    /// Cancel denominator factors that divide the numerator exactly, detected
    /// only in the cheap case where the numerator is a unit multiple of a
    /// power of the factor. Keeps `1 = f/f` from lingering.
    fn trimmed(mut self) -> Frac {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        if self.den.is_empty() {
            return self;
        }
        let (shift, lead, factor) = normalize(&self.num);
        if let Some(f) = factor {
            if let Some(pos) = self.den.iter().position(|(g, _)| *g == f) {
                let e = self.den[pos].1;
                if e == 1 {
                    self.den.remove(pos);
                } else {
                    self.den[pos].1 -= 1;
                }
                self.num = Poly::monomial(shift, lead);
            }
        }
        self
    }

    /// Build `unit * factor^{-1}` products quickly from a list of polynomials.
    pub fn from_factors(num: Poly, dens: &[Poly]) -> Result<Frac, AlgebraError> {
        let mut out = Frac::from_poly(num);
        for d in dens {
            out = out.mul(&Frac::ratio(Poly::one(), d)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, " / ")?;
        for (i, (fac, e)) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if fac.0.len() > 1 {
                write!(f, "({})", fac.0)?;
            } else {
                write!(f, "{}", fac.0)?;
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frac({self})")
    }
}
