//! Bernoulli numbers, generalized Bernoulli numbers of quadratic characters,
//! and Cohen's function `H(r, N)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_algebra::{int, BigRat};
use crate::quadfields::{is_fundamental, kronecker};

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `B₀, …, B_n` with `B₁ = −1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRat> {
    let mut b = vec![BigRat::zero(); n + 1];
    b[0] = BigRat::one();
    for m in 1..=n {
        // Σ_{j<m+1} C(m+1, j) B_j = 0
        let mut s = BigRat::zero();
        for (j, bj) in b.iter().enumerate().take(m) {
            s += BigRat::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
        }
        b[m] = -s / BigRat::from_integer((m as u64 + 1).into());
    }
    b
}

/// Bernoulli polynomial `B_r(x) = Σ_j C(r, j) B_j x^{r−j}`.
fn bernoulli_poly(r: usize, x: &BigRat, b: &[BigRat]) -> BigRat {
    let mut s = BigRat::zero();
    let mut xp = BigRat::one();
    // accumulate from j = r down to 0 so that x^{r−j} grows
    for j in (0..=r).rev() {
        s += BigRat::from_integer(binomial(r as u64, j as u64)) * &b[j] * &xp;
        xp *= x;
    }
    s
}

/// `B_{r,χ_D} = F^{r−1} Σ_{a=1}^{F} χ_D(a) B_r(a/F)` with `F = |D|`.
pub fn generalized_bernoulli(r: usize, d: i64) -> BigRat {
    let f = d.unsigned_abs();
    let b = bernoulli_numbers(r);
    let mut s = BigRat::zero();
    for a in 1..=f {
        let chi = kronecker(d, a as i64);
        if chi == 0 {
            continue;
        }
        let x = BigRat::new(BigInt::from(a), BigInt::from(f));
        let v = bernoulli_poly(r, &x, &b);
        if chi > 0 {
            s += v;
        } else {
            s -= v;
        }
    }
    s * num_traits::pow(BigRat::from_integer(f.into()), r - 1)
}

fn sigma(n: u64, k: u32) -> BigInt {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| num_traits::pow(BigInt::from(d), k as usize)).sum()
}

fn mobius(mut n: u64) -> i64 {
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

/// Write `−N = D·f²` with `D` a fundamental discriminant.
fn fundamental_part(n: u64) -> (i64, u64) {
    let m = -(n as i64);
    let mut f = 1u64;
    let mut g = 1u64;
    while g * g <= n {
        if n.is_multiple_of(g * g) && is_fundamental(m / (g * g) as i64) {
            f = g;
        }
        g += 1;
    }
    (m / (f * f) as i64, f)
}

/// Cohen's `H(r, N)`.
///
/// `H(r, 0) = ζ(1 − 2r) = −B_{2r}/(2r)`; for `N ≡ 1, 2 (mod 4)` it is 0;
/// otherwise, with `−N = Df²`,
/// `H(r, N) = L(1−r, χ_D) Σ_{e|f} μ(e) χ_D(e) e^{r−1} σ_{2r−1}(f/e)` and
/// `L(1−r, χ_D) = −B_{r,χ_D}/r`.
pub fn cohen_number(r: u32, n: u64) -> BigRat {
    assert!(r >= 1);
    if n == 0 {
        let b = bernoulli_numbers(2 * r as usize);
        return -&b[2 * r as usize] / int(2 * r as i64);
    }
    if matches!(n % 4, 1 | 2) {
        return BigRat::zero();
    }
    let (d, f) = fundamental_part(n);
    let l = -generalized_bernoulli(r as usize, d) / int(r as i64);
    let mut s = BigInt::zero();
    for e in (1..=f).filter(|e| f % e == 0) {
        let mu = mobius(e);
        if mu == 0 {
            continue;
        }
        let chi = kronecker(d, e as i64);
        let term = num_traits::pow(BigInt::from(e), r as usize - 1) * sigma(f / e, 2 * r - 1);
        s += term * (mu * chi as i64);
    }
    l * BigRat::from_integer(s)
}
