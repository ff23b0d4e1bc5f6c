//! Positive definite binary quadratic forms `ax² + bxy + cy²`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::QuadError;

/// `ax² + bxy + cy²`, i.e. the half-integral matrix `[[a, b/2], [b/2, c]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a > 0 && self.disc() < 0
    }

    pub fn content(&self) -> i64 {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// `|b| ≤ a ≤ c`, with `b ≥ 0` when `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        b.abs() <= a && a <= c && !((b.abs() == a || a == c) && b < 0)
    }

    /// The principal form of discriminant `d`.
    pub fn principal(d: i64) -> Self {
        let b = d.rem_euclid(2);
        Self::new(1, b, (b * b - d) / 4)
    }

    /// The inverse class: `(a, −b, c)`.
    pub fn inverse(&self) -> Self {
        Self::new(self.a, -self.b, self.c)
    }

    /// Value at `(x, y)`.
    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    /// Act by `[[p, q], [r, s]] ∈ SL(2, Z)`: `f(px + qy, rx + sy)`.
    pub fn act(&self, m: [[i64; 2]; 2]) -> Self {
        let [[p, q], [r, s]] = m;
        let (a, b, c) = (self.a, self.b, self.c);
        Self::new(
            a * p * p + b * p * r + c * r * r,
            2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
            a * q * q + b * q * s + c * s * s,
        )
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl FromStr for QuadForm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        if parts.len() != 3 {
            return Err(format!("expected three integers a, b, c in {s:?}"));
        }
        let n = |p: &str| p.parse::<i64>().map_err(|e| format!("{p:?}: {e}"));
        Ok(Self::new(n(parts[0])?, n(parts[1])?, n(parts[2])?))
    }
}

/// The reduced form properly equivalent to `f`.
pub fn reduce(f: QuadForm) -> Result<QuadForm, QuadError> {
    if !f.is_positive_definite() {
        return Err(QuadError::NotPositiveDefinite(f));
    }
    let d = f.disc();
    let (mut a, mut b, mut c) = (f.a, f.b, f.c);
    loop {
        // bring b into (−a, a]
        if b <= -a || b > a {
            let two_a = 2 * a;
            let mut r = b.rem_euclid(two_a);
            if r > a {
                r -= two_a;
            }
            b = r;
            c = (b * b - d) / (4 * a);
        }
        if a > c {
            // (x, y) ↦ (−y, x)
            std::mem::swap(&mut a, &mut c);
            b = -b;
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        return Ok(QuadForm::new(a, b, c));
    }
}

/// All reduced primitive forms of discriminant `d < 0`, principal first,
/// then ordered by `(a, |b|)` with positive `b` before negative.
pub fn reduced_forms(d: i64) -> Vec<QuadForm> {
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a..=a {
            if (b * b - d) % (4 * a) != 0 {
                continue;
            }
            let f = QuadForm::new(a, b, (b * b - d) / (4 * a));
            if f.is_reduced() && f.is_primitive() {
                out.push(f);
            }
        }
        a += 1;
    }
    out.sort_by_key(|f| (f.a, f.b.abs(), f.b < 0));
    out
}

/// `(g, x, y)` with `g = gcd(a, b) = xa + yb`, `g ≥ 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Gauss composition, returning the reduced representative.
///
/// With `s = (b₁+b₂)/2`, `n = b₂ − s` and `d₁ = gcd(a₁, a₂, s)` written
/// through Bezout coefficients, the composite is `(a₁a₂/d₁², b₂ + 2(a₂/d₁)r, ·)`
/// where `r` solves the linear congruence modulo `a₁/d₁` (the classical
/// gcd-based algorithm).
pub fn compose(f: QuadForm, g: QuadForm) -> Result<QuadForm, QuadError> {
    let d = f.disc();
    if g.disc() != d {
        return Err(QuadError::DiscriminantMismatch(f, g));
    }
    let (f, g) = if f.a > g.a { (g, f) } else { (f, g) };
    let (a1, b1, _c1) = (f.a, f.b, f.c);
    let (a2, b2, c2) = (g.a, g.b, g.c);
    let s = (b1 + b2) / 2;
    let n = b2 - s;
    // u·a2 + v·a1 = d0
    let (y1, d0) = if a2 % a1 == 0 {
        (0, a1)
    } else {
        let (g0, u, _v) = ext_gcd(a2, a1);
        (u, g0)
    };
    let (x2, y2, d1) = if s % d0 == 0 {
        (0, -1, d0)
    } else {
        let (g1, u, v) = ext_gcd(s, d0);
        (u, -v, g1)
    };
    let v1 = a1 / d1;
    let v2 = a2 / d1;
    let r = ((y1 as i128 * y2 as i128 * n as i128 - x2 as i128 * c2 as i128).rem_euclid(v1 as i128)) as i64;
    let b3 = b2 + 2 * v2 * r;
    let a3 = v1 * v2;
    let c3 = (b3 * b3 - d) / (4 * a3);
    reduce(QuadForm::new(a3, b3, c3))
}
