//! Classification of `n(X)·diag(1, u, u, 1)` into the double cosets
//! `Z(F)G(o)h(ℓ,m)G(o)`, `h(ℓ,m) = diag(ϖ^{ℓ+2m}, ϖ^{ℓ+m}, 1, ϖ^m)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LocalError;
use crate::exact_algebra::BigRat;

/// Torus representative index `(ℓ, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetIndex {
    pub ell: u32,
    pub m: u32,
}

impl CosetIndex {
    pub const fn new(ell: u32, m: u32) -> Self {
        Self { ell, m }
    }
}

impl fmt::Display for CosetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h({}, {})", self.ell, self.m)
    }
}

/// A p-adic valuation with `v(0) = +∞`. Infinity is a saturating sentinel so
/// that sums and minima need no special cases.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation(i64);

impl Valuation {
    pub const INFINITY: Valuation = Valuation(i64::MAX / 4);

    pub const fn finite(v: i64) -> Self {
        Valuation(v)
    }

    pub fn is_infinite(self) -> bool {
        self.0 >= Self::INFINITY.0
    }

    pub fn value(self) -> Option<i64> {
        (!self.is_infinite()).then_some(self.0)
    }

    fn saturate(v: i64) -> Self {
        Valuation(v.min(Self::INFINITY.0))
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, o: Valuation) -> Valuation {
        if self.is_infinite() || o.is_infinite() {
            Valuation::INFINITY
        } else {
            Valuation::saturate(self.0 + o.0)
        }
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "∞"),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(x)` for a rational `x`.
pub fn padic_valuation(x: &BigRat, p: u64) -> Valuation {
    if x.is_zero() {
        return Valuation::INFINITY;
    }
    let p = BigInt::from(p);
    Valuation::finite(int_valuation(x.numer(), &p) - int_valuation(x.denom(), &p))
}

/// `(ℓ, m)` with `n(X)·diag(1, u, u, 1) ∈ Z(F)G(o)h(ℓ,m)G(o)` for
/// `X = [[x, y], [y, z]]`, `v(u) ∈ {0, 1}`:
///
/// with `m₁ = min(0, v(ux), v(y), v(z))` and
/// `M = min(0, v(u) + v(xz − y²), v(ux), v(uy), v(z))`,
/// `ℓ = v(u) + 2(m₁ − M)` and `m = M − 2m₁`.
pub fn classify_double_coset(
    x: &BigRat,
    y: &BigRat,
    z: &BigRat,
    u: &BigRat,
    p: u64,
) -> Result<CosetIndex, LocalError> {
    let v = |t: &BigRat| padic_valuation(t, p);
    let vu = v(u);
    if vu != Valuation::finite(0) && vu != Valuation::finite(1) {
        return Err(LocalError::UnitValuation(vu));
    }
    let zero = Valuation::finite(0);
    let vux = vu + v(x);
    let m1 = zero.min(vux).min(v(y)).min(v(z));
    let det = x * z - y * y;
    let big_m = zero.min(vu + v(&det)).min(vux).min(vu + v(y)).min(v(z));
    // all minima include 0, so they are finite
    let (m1, big_m, vu) = (m1.0, big_m.0, vu.0);
    let ell = vu + 2 * (m1 - big_m);
    let m = big_m - 2 * m1;
    debug_assert!(ell >= 0 && m >= 0);
    Ok(CosetIndex::new(ell as u32, m as u32))
}
