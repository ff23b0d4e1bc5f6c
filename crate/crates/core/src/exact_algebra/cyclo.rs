//! Exact elements of the cyclotomic field `Q(ζ_n)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::BigRat;

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    debug_assert_eq!(lead, 1);
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// `Σ c_i ζ_n^i`, reduced modulo the n-th cyclotomic polynomial
/// (so `coeffs.len() == φ(n)`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<BigRat>,
}

impl Cyclo {
    fn phi_len(order: u32) -> usize {
        cyclotomic_poly(order).len() - 1
    }

    /// Reduce an arbitrary coefficient vector in powers of `ζ_n`.
    fn reduce(order: u32, mut raw: Vec<BigRat>) -> Self {
        let modulus = cyclotomic_poly(order);
        let deg = modulus.len() - 1;
        // ζ^n = 1 first, to keep the division short
        let n = order as usize;
        if raw.len() > n {
            let extra: Vec<BigRat> = raw.drain(n..).collect();
            for (i, c) in extra.into_iter().enumerate() {
                raw[i % n] += c;
            }
        }
        for i in (deg..raw.len()).rev() {
            let c = std::mem::take(&mut raw[i]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in modulus.iter().enumerate().take(deg) {
                raw[i - deg + j] -= &c * BigRat::from_integer((*mj).into());
            }
        }
        raw.resize(deg, BigRat::zero());
        Self { order, coeffs: raw }
    }

    pub fn zero(order: u32) -> Self {
        Self { order, coeffs: vec![BigRat::zero(); Self::phi_len(order)] }
    }

    pub fn from_rat(order: u32, c: BigRat) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = c;
        out
    }

    pub fn one(order: u32) -> Self {
        Self::from_rat(order, BigRat::one())
    }

    /// `ζ_n^k`.
    pub fn root(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![BigRat::zero(); e + 1];
        raw[e] = BigRat::one();
        Self::reduce(order, raw)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRat> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRat::zero))
        } else {
            None
        }
    }

    /// Re-express in `Q(ζ_m)` for a multiple `m` of the order.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.order), "lift target must be a multiple of the order");
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut raw = vec![BigRat::zero(); step * self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Self::reduce(m, raw)
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else {
            let m = a.order.lcm(&b.order);
            (a.lift(m), b.lift(m))
        }
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        let (a, b) = Self::common(self, other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclo { order: a.order, coeffs }
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        let (a, b) = Self::common(self, other);
        let mut raw = vec![BigRat::zero(); (a.coeffs.len() * 2).max(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        Self::reduce(a.order, raw)
    }

    pub fn scale(&self, c: &BigRat) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Complex conjugate: `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyclo {
        let n = self.order as usize;
        let mut raw = vec![BigRat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[(n - i) % n] += c;
        }
        Self::reduce(self.order, raw)
    }

    /// `|x|²`, which is totally real but returned in the same field.
    pub fn norm_sq(&self) -> Cyclo {
        self.mul(&self.conj())
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * i as f64 / n;
            (re + c * t.cos(), im + c * t.sin())
        })
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if wrote {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "z{}", self.order)?,
                1 => write!(f, "{a}*z{}", self.order)?,
                _ if a.is_one() => write!(f, "z{}^{i}", self.order)?,
                _ => write!(f, "{a}*z{}^{i}", self.order)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..=30u32 {
            let s = (0..n as i64).fold(Cyclo::zero(n), |acc, k| acc.add(&Cyclo::root(n, k)));
            assert!(s.is_zero(), "n = {n}");
        }
        assert!(!Cyclo::root(1, 0).is_zero());
    }

    #[test]
    fn root_power_and_conjugate() {
        let z = Cyclo::root(7, 1);
        let mut p = Cyclo::one(7);
        for _ in 0..7 {
            p = p.mul(&z);
        }
        assert_eq!(p, Cyclo::one(7));
        assert_eq!(z.mul(&z.conj()), Cyclo::one(7));
        assert_eq!(Cyclo::root(12, 5).conj(), Cyclo::root(12, 7));
    }

    #[test]
    fn lifting_preserves_value() {
        let a = Cyclo::root(3, 1);
        let b = Cyclo::root(4, 1);
        let prod = a.mul(&b);
        assert_eq!(prod.order(), 12);
        assert_eq!(prod, Cyclo::root(12, 4 + 3));
        let (re, im) = prod.to_complex();
        let t = 2.0 * std::f64::consts::PI * 7.0 / 12.0;
        assert!((re - t.cos()).abs() < 1e-12 && (im - t.sin()).abs() < 1e-12);
    }
}
