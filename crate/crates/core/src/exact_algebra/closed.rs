//! Closed-form positive-or-negative reals `c · √s · π^k · e^{aπ}` with
//! `c, a` rational, `s` a squarefree positive integer, `k` an integer.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::BigRat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedForm {
    coeff: BigRat,
    sqrt_of: BigInt,
    pi_pow: i32,
    exp_pi: BigRat,
}

fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    // n = outer^2 * inner with inner squarefree; trial division is enough at
    // the sizes used here
    let mut inner = BigInt::one();
    let mut outer = BigInt::one();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        outer *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            inner *= &p;
        }
        p += 1;
    }
    inner *= m;
    (outer, inner)
}

/// Natural log of a positive big integer.
pub(crate) fn ln_bigint(n: &BigInt) -> f64 {
    debug_assert!(n.sign() == Sign::Plus);
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

pub(crate) fn ln_rat(x: &BigRat) -> f64 {
    ln_bigint(&x.numer().abs()) - ln_bigint(x.denom())
}

impl ClosedForm {
    pub fn rational(c: BigRat) -> Self {
        Self { coeff: c, sqrt_of: BigInt::one(), pi_pow: 0, exp_pi: BigRat::zero() }
    }

    pub fn pi_pow(k: i32) -> Self {
        Self { pi_pow: k, ..Self::rational(BigRat::one()) }
    }

    /// `e^{aπ}`.
    pub fn exp_pi(a: BigRat) -> Self {
        Self { exp_pi: a, ..Self::rational(BigRat::one()) }
    }

    /// `√x` for a positive rational.
    pub fn sqrt(x: &BigRat) -> Self {
        assert!(x.is_positive());
        // √(a/b) = √(ab)/b
        let ab = x.numer() * x.denom();
        let (outer, inner) = squarefree_split(&ab);
        Self {
            coeff: BigRat::new(outer, x.denom().clone()),
            sqrt_of: inner,
            pi_pow: 0,
            exp_pi: BigRat::zero(),
        }
    }

    pub fn mul(&self, o: &ClosedForm) -> ClosedForm {
        let mut coeff = &self.coeff * &o.coeff;
        let s = &self.sqrt_of * &o.sqrt_of;
        let (outer, inner) = squarefree_split(&s);
        coeff *= BigRat::from_integer(outer);
        ClosedForm { coeff, sqrt_of: inner, pi_pow: self.pi_pow + o.pi_pow, exp_pi: &self.exp_pi + &o.exp_pi }
    }

    pub fn recip(&self) -> ClosedForm {
        // 1/(c√s) = √s/(c s)
        let c = (&self.coeff * BigRat::from_integer(self.sqrt_of.clone())).recip();
        ClosedForm { coeff: c, sqrt_of: self.sqrt_of.clone(), pi_pow: -self.pi_pow, exp_pi: -&self.exp_pi }
    }

    pub fn div(&self, o: &ClosedForm) -> ClosedForm {
        self.mul(&o.recip())
    }

    pub fn scale(&self, c: &BigRat) -> ClosedForm {
        ClosedForm { coeff: &self.coeff * c, ..self.clone() }
    }

    pub fn powi(&self, e: i32) -> ClosedForm {
        let mut out = ClosedForm::rational(BigRat::one());
        let base = if e < 0 { self.recip() } else { self.clone() };
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn coeff(&self) -> &BigRat {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Natural log of the absolute value.
    pub fn ln_abs(&self) -> f64 {
        ln_rat(&self.coeff)
            + 0.5 * ln_bigint(&self.sqrt_of)
            + self.pi_pow as f64 * std::f64::consts::PI.ln()
            + self.exp_pi.to_f64().unwrap() * std::f64::consts::PI
    }

    pub fn to_f64(&self) -> f64 {
        if self.coeff.is_zero() {
            return 0.0;
        }
        let sign = if self.coeff.is_negative() { -1.0 } else { 1.0 };
        sign * self.ln_abs().exp()
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if !self.sqrt_of.is_one() {
            write!(f, "*sqrt({})", self.sqrt_of)?;
        }
        match self.pi_pow {
            0 => {}
            1 => write!(f, "*pi")?,
            k => write!(f, "*pi^{k}")?,
        }
        if !self.exp_pi.is_zero() {
            write!(f, "*exp({}*pi)", self.exp_pi)?;
        }
        Ok(())
    }
}
