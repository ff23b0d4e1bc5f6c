//! Exact elements of `Q(q^{1/2}, α, β, t)[γ] / (γ² − g)` where `g = (αβ)⁻¹`
//! unless a substitution has specialised it.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::frac::Frac;
use super::poly::{Mono, Poly, Var, NVARS};
use super::{AlgebraError, BigRat};

/// `even + γ·odd` with `γ² = gamma_sq`.
#[derive(Clone)]
pub struct SymRat {
    even: Frac,
    odd: Frac,
    gamma_sq: Arc<Frac>,
}

fn default_gamma_sq() -> Arc<Frac> {
    let mut m: Mono = [0; NVARS];
    m[Var::Alpha.index()] = -1;
    m[Var::Beta.index()] = -1;
    Arc::new(Frac::from_poly(Poly::monomial(m, BigRat::one())))
}

fn same_relation(a: &Arc<Frac>, b: &Arc<Frac>) -> bool {
    Arc::ptr_eq(a, b) || (a.num() == b.num() && a.den_factors() == b.den_factors()) || a.eq_exact(b)
}

impl SymRat {
    pub fn from_frac(even: Frac) -> Self {
        Self { even, odd: Frac::zero(), gamma_sq: default_gamma_sq() }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_frac(Frac::from_poly(p))
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_frac(Frac::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRat::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(BigRat::new(n.into(), d.into()))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn alpha() -> Self {
        Self::var(Var::Alpha)
    }

    pub fn beta() -> Self {
        Self::var(Var::Beta)
    }

    /// `q^{1/2}`.
    pub fn sqrt_q() -> Self {
        Self::var(Var::R)
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::var_pow(Var::R, 2))
    }

    /// `q^{e/2}`.
    pub fn q_half_pow(e: i32) -> Self {
        Self::from_poly(Poly::var_pow(Var::R, e))
    }

    pub fn gamma() -> Self {
        Self { even: Frac::zero(), odd: Frac::one(), gamma_sq: default_gamma_sq() }
    }

    /// `γ` in a ring where `γ²` is the given value, e.g. a rational once α and β
    /// are numeric.
    pub fn gamma_with_square(sq: Frac) -> Self {
        Self { even: Frac::zero(), odd: Frac::one(), gamma_sq: Arc::new(sq) }
    }

    /// `even + γ·odd` for explicit parts in the default ring.
    pub fn from_parts(even: Frac, odd: Frac) -> Self {
        Self { even, odd, gamma_sq: default_gamma_sq() }
    }

    pub fn even(&self) -> &Frac {
        &self.even
    }

    pub fn odd(&self) -> &Frac {
        &self.odd
    }

    pub fn gamma_sq(&self) -> &Frac {
        &self.gamma_sq
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_even(&self) -> bool {
        self.odd.is_zero()
    }

    /// The rational value if this element is a constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        if self.odd.is_zero() {
            self.even.as_constant()
        } else {
            None
        }
    }

    fn relation_for(&self, other: &SymRat) -> Result<Arc<Frac>, AlgebraError> {
        match (self.odd.is_zero(), other.odd.is_zero()) {
            (true, _) => Ok(other.gamma_sq.clone()),
            (false, true) => Ok(self.gamma_sq.clone()),
            (false, false) => {
                if same_relation(&self.gamma_sq, &other.gamma_sq) {
                    Ok(self.gamma_sq.clone())
                } else {
                    Err(AlgebraError::RelationMismatch)
                }
            }
        }
    }

    pub fn try_add(&self, other: &SymRat) -> Result<SymRat, AlgebraError> {
        let gamma_sq = self.relation_for(other)?;
        Ok(SymRat { even: self.even.add(&other.even), odd: self.odd.add(&other.odd), gamma_sq })
    }

    pub fn try_mul(&self, other: &SymRat) -> Result<SymRat, AlgebraError> {
        let gamma_sq = self.relation_for(other)?;
        let mut even = self.even.mul(&other.even);
        if !self.odd.is_zero() && !other.odd.is_zero() {
            even = even.add(&self.odd.mul(&other.odd).mul(&gamma_sq));
        }
        let odd = self.even.mul(&other.odd).add(&self.odd.mul(&other.even));
        Ok(SymRat { even, odd, gamma_sq })
    }

    pub fn neg(&self) -> SymRat {
        SymRat { even: self.even.neg(), odd: self.odd.neg(), gamma_sq: self.gamma_sq.clone() }
    }

    pub fn try_sub(&self, other: &SymRat) -> Result<SymRat, AlgebraError> {
        self.try_add(&other.neg())
    }

    /// Multiplicative inverse via the conjugate `even − γ·odd`.
    pub fn inv(&self) -> Result<SymRat, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.odd.is_zero() {
            return Ok(SymRat {
                even: self.even.inv()?,
                odd: Frac::zero(),
                gamma_sq: self.gamma_sq.clone(),
            });
        }
        let norm = self
            .even
            .mul(&self.even)
            .sub(&self.odd.mul(&self.odd).mul(&self.gamma_sq));
        let ninv = norm.inv()?;
        Ok(SymRat {
            even: self.even.mul(&ninv),
            odd: self.odd.neg().mul(&ninv),
            gamma_sq: self.gamma_sq.clone(),
        })
    }

    pub fn try_div(&self, other: &SymRat) -> Result<SymRat, AlgebraError> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<SymRat, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = SymRat::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&b)?;
            }
            n >>= 1;
            if n > 0 {
                b = b.try_mul(&b)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRat) -> SymRat {
        SymRat { even: self.even.scale(c), odd: self.odd.scale(c), gamma_sq: self.gamma_sq.clone() }
    }

    /// Exact equality.
    pub fn eq_exact(&self, other: &SymRat) -> Result<bool, AlgebraError> {
        Ok(self.try_sub(other)?.is_zero())
    }

    /// Apply a substitution.
    pub fn substitute(&self, b: &Bindings) -> Result<SymRat, AlgebraError> {
        let mut ev = Evaluator::new(b)?;
        let even = ev.frac(&self.even)?;
        let odd = ev.frac(&self.odd)?;
        let relation = ev.frac(&self.gamma_sq)?;
        let gamma = match &b.gamma {
            Some(g) => {
                let sq = g.try_mul(g)?;
                if !sq.eq_exact(&relation)? {
                    return Err(AlgebraError::InconsistentGamma);
                }
                g.clone()
            }
            None => {
                if !relation.odd.is_zero() {
                    return Err(AlgebraError::InconsistentGamma);
                }
                SymRat { even: Frac::zero(), odd: Frac::one(), gamma_sq: Arc::new(relation.even) }
            }
        };
        let shifted = gamma.try_mul(&odd)?;
        even.try_add(&shifted)
    }

    /// Floating embedding for fully numeric values, with `γ` taken as the
    /// given branch of the square root of `gamma_sq`.
    pub fn to_f64(&self, gamma_sign: f64) -> Option<f64> {
        let e = frac_to_f64(&self.even)?;
        if self.odd.is_zero() {
            return Some(e);
        }
        let o = frac_to_f64(&self.odd)?;
        let g = frac_to_f64(&self.gamma_sq)?;
        Some(e + gamma_sign * g.sqrt() * o)
    }
}

fn frac_to_f64(f: &Frac) -> Option<f64> {
    use num_traits::ToPrimitive;
    f.as_constant().and_then(|c| c.to_f64())
}

impl fmt::Display for SymRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "γ*[{}]", self.odd),
            (false, false) => write!(f, "{} + γ*[{}]", self.even, self.odd),
        }
    }
}

impl fmt::Debug for SymRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymRat({self})")
    }
}

/// A substitution: images of polynomial variables, optionally `q` as a
/// rational (acting on even powers of `q^{1/2}`), and optionally `γ`.
#[derive(Clone, Default)]
pub struct Bindings {
    vars: Vec<(Var, SymRat)>,
    q: Option<BigRat>,
    gamma: Option<SymRat>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, value: SymRat) -> Self {
        self.vars.retain(|(w, _)| *w != v);
        self.vars.push((v, value));
        self
    }

    pub fn with_rat(self, v: Var, value: BigRat) -> Self {
        self.with(v, SymRat::constant(value))
    }

    pub fn with_int(self, v: Var, value: i64) -> Self {
        self.with(v, SymRat::int(value))
    }

    /// Bind `q` itself; only expressions with even powers of `q^{1/2}` can be
    /// evaluated this way.
    pub fn with_q(mut self, q: BigRat) -> Self {
        self.q = Some(q);
        self
    }

    pub fn with_gamma(mut self, value: SymRat) -> Self {
        self.gamma = Some(value);
        self
    }
}

enum Image {
    /// `coeff * monomial`, applied at the polynomial level
    Mono(Mono, BigRat),
    General(SymRat),
}

struct Evaluator {
    images: [Option<Image>; NVARS],
    q: Option<BigRat>,
    cache: HashMap<(usize, i32), SymRat>,
}

impl Evaluator {
    fn new(b: &Bindings) -> Result<Self, AlgebraError> {
        let mut images: [Option<Image>; NVARS] = Default::default();
        for (v, val) in &b.vars {
            if *v == Var::R && b.q.is_some() {
                return Err(AlgebraError::ConflictingBindings);
            }
            let img = if val.odd.is_zero() && val.even.den_factors().is_empty() && val.even.num().len() == 1 {
                let (m, c) = val.even.num().terms().next().map(|(m, c)| (*m, c.clone())).unwrap();
                Image::Mono(m, c)
            } else if val.is_zero() {
                Image::Mono([0; NVARS], BigRat::zero())
            } else {
                Image::General(val.clone())
            };
            images[v.index()] = Some(img);
        }
        Ok(Self { images, q: b.q.clone(), cache: HashMap::new() })
    }

    fn pow_of(&mut self, vi: usize, e: i32) -> Result<SymRat, AlgebraError> {
        if let Some(v) = self.cache.get(&(vi, e)) {
            return Ok(v.clone());
        }
        let Some(Image::General(s)) = &self.images[vi] else { unreachable!() };
        let v = s.pow(e)?;
        self.cache.insert((vi, e), v.clone());
        Ok(v)
    }

    fn poly(&mut self, p: &Poly) -> Result<SymRat, AlgebraError> {
        let mut fast = Poly::zero();
        let mut slow: Option<SymRat> = None;
        for (m, c) in p.terms() {
            let mut coeff = c.clone();
            let mut mono: Mono = [0; NVARS];
            let mut general: Vec<(usize, i32)> = Vec::new();
            for (vi, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if vi == Var::R.index() {
                    if let Some(q) = &self.q {
                        if e % 2 != 0 {
                            return Err(AlgebraError::OddPowerOfSqrtQ);
                        }
                        coeff *= super::poly::rat_pow(q, e / 2);
                        continue;
                    }
                }
                match &self.images[vi] {
                    None => mono[vi] += e,
                    Some(Image::Mono(im, ic)) => {
                        if ic.is_zero() && e < 0 {
                            return Err(AlgebraError::Pole(format!(
                                "{}^{} at {} = 0",
                                Var::ALL[vi].name(),
                                e,
                                Var::ALL[vi].name()
                            )));
                        }
                        coeff *= super::poly::rat_pow(ic, e);
                        for (k, x) in mono.iter_mut().enumerate() {
                            *x += im[k] * e;
                        }
                    }
                    Some(Image::General(_)) => general.push((vi, e)),
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let term = Poly::monomial(mono, coeff);
            if general.is_empty() {
                fast = &fast + &term;
            } else {
                let mut acc = SymRat::from_poly(term);
                for (vi, e) in general {
                    acc = acc.try_mul(&self.pow_of(vi, e)?)?;
                }
                slow = Some(match slow {
                    None => acc,
                    Some(s) => s.try_add(&acc)?,
                });
            }
        }
        let fast = SymRat::from_poly(fast);
        match slow {
            None => Ok(fast),
            Some(s) => s.try_add(&fast),
        }
    }

    fn frac(&mut self, f: &Frac) -> Result<SymRat, AlgebraError> {
        let mut out = self.poly(f.num())?;
        if out.is_zero() {
            return Ok(out);
        }
        for (fac, e) in f.den_factors() {
            let v = self.poly(fac.poly())?;
            if v.is_zero() {
                return Err(AlgebraError::Pole(fac.poly().to_string()));
            }
            out = out.try_mul(&v.pow(-(*e as i32))?)?;
        }
        Ok(out)
    }
}

macro_rules! infallible_op {
    ($tr:ident, $f:ident, $m:ident) => {
        impl std::ops::$tr for &SymRat {
            type Output = SymRat;
            /// Panics if the operands live in different quadratic extensions.
            fn $f(self, rhs: &SymRat) -> SymRat {
                self.$m(rhs).expect("operands share the γ relation")
            }
        }
        impl std::ops::$tr for SymRat {
            type Output = SymRat;
            fn $f(self, rhs: SymRat) -> SymRat {
                (&self).$m(&rhs).expect("operands share the γ relation")
            }
        }
    };
}
infallible_op!(Add, add, try_add);
infallible_op!(Sub, sub, try_sub);
infallible_op!(Mul, mul, try_mul);

impl std::ops::Neg for &SymRat {
    type Output = SymRat;
    fn neg(self) -> SymRat {
        SymRat::neg(self)
    }
}
