//! Sparse Laurent polynomials in a fixed set of variables over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::BigRat;

/// Number of polynomial variables.
pub const NVARS: usize = 4;

/// The polynomial variables.
///
/// `R` stands for `q^{1/2}`; every power of the residue cardinality is
/// expressed through it so that half-integral powers stay polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    R,
    Alpha,
    Beta,
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::R, Var::Alpha, Var::Beta, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::R => "q",
            Var::Alpha => "α",
            Var::Beta => "β",
            Var::T => "t",
        }
    }
}

/// Exponent vector of a Laurent monomial.
pub type Mono = [i32; NVARS];

pub(crate) const ONE_MONO: Mono = [0; NVARS];

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = *a;
    for (o, e) in out.iter_mut().zip(b) {
        *o += e;
    }
    out
}

/// A Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, BigRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(ONE_MONO, c)
    }

    pub fn monomial(m: Mono, c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// `v^e` for a single variable.
    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut m = ONE_MONO;
        m[v.index()] = e;
        Self::monomial(m, BigRat::one())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ONE_MONO).is_some_and(|c| c.is_one())
    }

    /// The constant value if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.len() {
            0 => Some(BigRat::zero()),
            1 => self.terms.get(&ONE_MONO).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Mono, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiply by a Laurent monomial.
    pub fn shift(&self, m: &Mono) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, v)| (mono_mul(k, m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Mono {
        let mut out = ONE_MONO;
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.terms.keys().map(|m| m[i]).min().unwrap_or(0);
        }
        out
    }

    /// The term with the largest monomial in the internal order.
    pub fn leading(&self) -> Option<(&Mono, &BigRat)> {
        self.terms.iter().next_back()
    }

    /// Highest exponent of `v` occurring.
    pub fn degree_in(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m[v.index()]).max()
    }

    /// Replace `r^2` by `q` for a rational `q`, provided every exponent of `r`
    /// is even.
    pub fn bind_q(&self, q: &BigRat) -> Option<Poly> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m[Var::R.index()];
            if e % 2 != 0 {
                return None;
            }
            let mut m2 = *m;
            m2[Var::R.index()] = 0;
            out.add_term(m2, c * rat_pow(q, e / 2));
        }
        Some(out)
    }
}

/// Integer power of a rational, negative exponents allowed for nonzero base.
pub fn rat_pow(x: &BigRat, e: i32) -> BigRat {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident, $t:ty) => {
        impl $tr for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add, Poly);
forward_owned!(Sub, sub, Poly);
forward_owned!(Mul, mul, Poly);

pub(crate) fn fmt_mono(m: &Mono, f: &mut fmt::Formatter<'_>) -> Result<bool, fmt::Error> {
    let mut wrote = false;
    for v in Var::ALL {
        let e = m[v.index()];
        if e == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        wrote = true;
        // r^e is printed as a power of q
        let (name, num, den) = if v == Var::R {
            if e % 2 == 0 { (v.name(), e / 2, 1) } else { (v.name(), e, 2) }
        } else {
            (v.name(), e, 1)
        };
        match (num, den) {
            (1, 1) => write!(f, "{name}")?,
            (n, 1) => write!(f, "{name}^{n}")?,
            (n, d) => write!(f, "{name}^({n}/{d})")?,
        }
    }
    Ok(wrote)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = *m == ONE_MONO;
            if is_const {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_mono(m, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
