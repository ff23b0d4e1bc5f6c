//! Truncated q-expansions of level-1 modular forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bernoulli::bernoulli_numbers;
use super::ModFormError;
use crate::exact_algebra::BigRat;

/// `Σ_{n<len} a_n qⁿ` with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct QExpansion {
    pub weight: i64,
    pub level: u64,
    pub coeffs: Vec<BigRat>,
}

impl QExpansion {
    pub fn new(weight: i64, level: u64, coeffs: Vec<BigRat>) -> Self {
        Self { weight, level, coeffs }
    }

    fn from_ints(weight: i64, coeffs: Vec<BigInt>) -> Self {
        Self::new(weight, 1, coeffs.into_iter().map(BigRat::from_integer).collect())
    }

    /// Number of known coefficients (`a_0 … a_{len−1}`).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `a_n`, or an error if `n` is beyond the known precision.
    pub fn coeff(&self, n: usize) -> Result<&BigRat, ModFormError> {
        self.coeffs
            .get(n)
            .ok_or(ModFormError::PrecisionExceeded { needed: n as u64, available: self.len() as u64 })
    }

    /// Keep `a_0 … a_{len−1}`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.weight, self.level, self.coeffs.iter().take(len).cloned().collect())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::new(self.weight, self.level, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Sum of two forms of equal weight, to the common precision.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.weight, other.weight, "adding forms of different weight");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self::new(self.weight, self.level.max(other.level), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRat::one()))
    }

    /// Product, to the common precision. Integral series are convolved over
    /// the integers.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.len().min(other.len());
        let weight = self.weight + other.weight;
        let level = self.level.max(other.level);
        if let (Some(a), Some(b)) = (integral(&self.coeffs), integral(&other.coeffs)) {
            let c = convolve_int(&a[..n], &b[..n]);
            let mut out = Self::from_ints(weight, c);
            out.level = level;
            return out;
        }
        let mut c = vec![BigRat::zero(); n];
        for (i, x) in self.coeffs[..n].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs[..n - i].iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::new(weight, level, c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::new(0, self.level, one_series(self.len()));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `a_n / n^{(w−1)/2}` for `n ≥ 1`, as floating point (`[0]` is 0).
    pub fn normalized_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        let kappa = (self.weight as f64 - 1.0) / 2.0;
        let mut out = vec![0.0; self.len()];
        for (n, a) in self.coeffs.iter().enumerate().skip(1) {
            // scale before converting so that huge coefficients stay finite
            let x = a.to_f64().unwrap_or_else(|| {
                let (num, den) = (a.numer().to_f64().unwrap_or(f64::INFINITY), a.denom().to_f64().unwrap_or(1.0));
                num / den
            });
            out[n] = x / (n as f64).powf(kappa);
        }
        out
    }
}

fn one_series(len: usize) -> Vec<BigRat> {
    let mut c = vec![BigRat::zero(); len];
    if len > 0 {
        c[0] = BigRat::one();
    }
    c
}

fn integral(c: &[BigRat]) -> Option<Vec<BigInt>> {
    c.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

fn convolve_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len();
    let mut c = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b[..n - i].iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

/// `σ_k(n)` for `0 ≤ n < len` by a divisor sieve (`σ_k(0)` is set to 0).
pub fn divisor_sums(k: u32, len: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); len];
    for d in 1..len {
        let dk = num_traits::pow(BigInt::from(d), k as usize);
        for m in (d..len).step_by(d) {
            s[m] += &dk;
        }
    }
    s
}

/// `E_k = 1 − (2k/B_k) Σ σ_{k−1}(n) qⁿ` to `len` coefficients, for even `k ≥ 4`.
pub fn eisenstein(k: i64, len: usize) -> Result<QExpansion, ModFormError> {
    if k < 4 || k % 2 != 0 {
        return Err(ModFormError::UnsupportedWeight(k));
    }
    let b = bernoulli_numbers(k as usize);
    let c = -BigRat::from_integer(BigInt::from(2 * k)) / &b[k as usize];
    let sig = divisor_sums(k as u32 - 1, len);
    let mut coeffs: Vec<BigRat> = sig.into_iter().map(|s| &c * BigRat::from_integer(s)).collect();
    if len > 0 {
        coeffs[0] = BigRat::one();
    }
    Ok(QExpansion::new(k, 1, coeffs))
}

/// `Δ = q ∏(1 − qⁿ)²⁴ = q·(Σ_{m≥0} (−1)^m (2m+1) q^{m(m+1)/2})⁸`, using
/// Jacobi's identity for `∏(1 − qⁿ)³`; each factor is sparse.
pub fn delta(len: usize) -> QExpansion {
    if len == 0 {
        return QExpansion::new(12, 1, Vec::new());
    }
    let mut sparse = Vec::new();
    let mut m = 0usize;
    while m * (m + 1) / 2 < len {
        let sign = if m.is_multiple_of(2) { 1 } else { -1 };
        sparse.push((m * (m + 1) / 2, BigInt::from(sign * (2 * m as i64 + 1))));
        m += 1;
    }
    let n = len - 1;
    let mut acc = vec![BigInt::zero(); n];
    if n > 0 {
        acc[0] = BigInt::one();
    }
    for _ in 0..8 {
        let mut next = vec![BigInt::zero(); n];
        for (i, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (e, c) in &sparse {
                if i + e >= n {
                    break;
                }
                next[i + e] += x * c;
            }
        }
        acc = next;
    }
    let mut coeffs = vec![BigInt::zero()];
    coeffs.extend(acc);
    QExpansion::from_ints(12, coeffs)
}

/// The normalized Hecke eigenform spanning `S_w(SL₂(Z))` for the weights
/// where that space is one-dimensional: `Δ·E₄^a·E₆^b`.
pub fn level1_cusp_eigenform(w: i64, len: usize) -> Result<QExpansion, ModFormError> {
    let (a, b) = match w {
        12 => (0, 0),
        16 => (1, 0),
        18 => (0, 1),
        20 => (2, 0),
        22 => (1, 1),
        26 => (2, 1),
        _ => return Err(ModFormError::UnsupportedWeight(w)),
    };
    let mut f = delta(len);
    if a > 0 {
        f = f.mul(&eisenstein(4, len)?.pow(a));
    }
    if b > 0 {
        f = f.mul(&eisenstein(6, len)?.pow(b));
    }
    Ok(f)
}

/// The Hecke eigenvalue `λ(n) = a_n` of a normalized eigenform.
pub fn hecke_eigenvalue(g: &QExpansion, n: usize) -> Result<BigRat, ModFormError> {
    if g.coeffs.get(1).is_none_or(|a| !a.is_one()) || g.coeffs.first().is_some_and(|a| !a.is_zero()) {
        return Err(ModFormError::NotNormalized);
    }
    g.coeff(n).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::int;

    #[test]
    fn eisenstein_and_delta() {
        let e4 = eisenstein(4, 10).unwrap();
        assert_eq!(e4.coeffs[1], int(240));
        assert_eq!(e4.coeffs[2], int(2160));
        let e6 = eisenstein(6, 10).unwrap();
        assert_eq!(e6.coeffs[1], int(-504));
        let d = delta(10);
        let want = [0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643];
        assert_eq!(d.coeffs, want.iter().map(|&x| int(x)).collect::<Vec<_>>());
        // 1728Δ = E₄³ − E₆²
        let lhs = e4.pow(3).sub(&e6.pow(2));
        assert_eq!(lhs, d.scale(&int(1728)));
        assert!(eisenstein(5, 3).is_err());
        assert!(eisenstein(2, 3).is_err());
    }

    #[test]
    fn weight_18() {
        let g = level1_cusp_eigenform(18, 10).unwrap();
        assert_eq!(g.coeffs[2], int(-528));
        assert_eq!(g.weight, 18);
        assert_eq!(hecke_eigenvalue(&g, 1).unwrap(), int(1));
        let a2 = hecke_eigenvalue(&g, 2).unwrap();
        assert_eq!(hecke_eigenvalue(&g, 4).unwrap(), &a2 * &a2 - int(1 << 17));
        assert!(level1_cusp_eigenform(14, 10).is_err());
        assert!(hecke_eigenvalue(&eisenstein(4, 5).unwrap(), 1).is_err());
    }
}
