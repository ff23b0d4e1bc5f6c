//! Independent reference computations shared by the integration tests.
//! Each recomputes a library result by a different route.

#![allow(dead_code)]

use std::collections::HashSet;

use bessel_core::exact_algebra::{rat_pow, BigRat};
use bessel_core::local_nonarch::padic_valuation;
use bessel_core::quadfields::{kronecker, reduce, QuadForm};
use num_integer::Integer;
use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// Spherical function as an explicit Weyl-group symmetrization
// ---------------------------------------------------------------------------

type Mat3 = [[i32; 3]; 3];

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// The Weyl group of GSp(4) acting on exponent vectors of `(α, β, γ)`,
/// generated by `α ↔ β` and `(β, γ) ↦ (β⁻¹, βγ)`.
pub fn weyl_group() -> Vec<Mat3> {
    let s1: Mat3 = [[0, 1, 0], [1, 0, 0], [0, 0, 1]];
    let s2: Mat3 = [[1, 0, 0], [0, -1, 0], [0, 1, 1]];
    let id: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut seen: HashSet<Mat3> = HashSet::from([id]);
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in [&s1, &s2] {
            let n = mat_mul(g, &m);
            if seen.insert(n) {
                frontier.push(n);
            }
        }
    }
    let mut out: Vec<Mat3> = seen.into_iter().collect();
    out.sort();
    out
}

fn act(w: &Mat3, t: &[BigRat; 3]) -> [BigRat; 3] {
    let comp = |row: &[i32; 3]| {
        row.iter().zip(t).fold(BigRat::one(), |acc, (&e, x)| acc * rat_pow(x, e))
    };
    [comp(&w[0]), comp(&w[1]), comp(&w[2])]
}

/// `Φ₀(h(ℓ,m))` with all of `q^{1/2}, α, β, γ` rational:
/// `q^{-(4m+3ℓ)/2} / (1+2q⁻¹+2q⁻²+2q⁻³+q⁻⁴) · Σ_w F(w·(α, β, γ))`,
/// `F = Π_{x ∈ {β/α, β⁻¹, (αβ)⁻¹, α⁻¹}} (1 − x/q)/(1 − x) · α^{2m+ℓ}β^{m+ℓ}γ^{2m+ℓ}`.
/// `None` if a denominator vanishes.
pub fn macdonald_oracle(r: &BigRat, alpha: &BigRat, beta: &BigRat, gamma: &BigRat, l: i32, m: i32) -> Option<BigRat> {
    let q = r * r;
    let one = BigRat::one();
    let mut total = BigRat::zero();
    for w in weyl_group() {
        let [a, b, g] = act(&w, &[alpha.clone(), beta.clone(), gamma.clone()]);
        let mut term = rat_pow(&a, 2 * m + l) * rat_pow(&b, m + l) * rat_pow(&g, 2 * m + l);
        for x in [&b / &a, one.clone() / &b, one.clone() / (&a * &b), one.clone() / &a] {
            let den = &one - &x;
            if den.is_zero() {
                return None;
            }
            term = term * (&one - &x / &q) / den;
        }
        total += term;
    }
    let qi = one.clone() / &q;
    let norm = &one + (&qi + &qi * &qi + &qi * &qi * &qi) * BigRat::from_integer(2.into()) + rat_pow(&qi, 4);
    Some(rat_pow(r, -(4 * m + 3 * l)) * total / norm)
}

// ---------------------------------------------------------------------------
// Elementary divisors through determinantal divisors
// ---------------------------------------------------------------------------

fn det(m: &[Vec<BigRat>]) -> BigRat {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    // Laplace expansion along the first row
    let mut s = BigRat::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRat>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let t = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
    }
    s
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|first| {
            subsets(n, k - 1)
                .into_iter()
                .filter(move |rest| rest.iter().all(|&x| x > first))
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// `e_k = δ_k − δ_{k−1}` with `δ_k` the least valuation of a `k × k` minor.
pub fn determinantal_exponents(m: &[Vec<BigRat>], p: u64) -> Vec<i64> {
    let n = m.len();
    let mut delta = vec![0i64];
    for k in 1..=n {
        let mut best: Option<i64> = None;
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let sub: Vec<Vec<BigRat>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect();
                let d = det(&sub);
                if let Some(v) = padic_valuation(&d, p).value() {
                    best = Some(best.map_or(v, |b: i64| b.min(v)));
                }
            }
        }
        delta.push(best.expect("invertible matrix"));
    }
    delta.windows(2).map(|w| w[1] - w[0]).collect()
}

/// `(ℓ, m)` from elementary divisor exponents `{0, m, ℓ+m, ℓ+2m}` (shifted).
pub fn coset_from_exponents(e: &[i64]) -> (u32, u32) {
    let mut e = e.to_vec();
    e.sort();
    let m = e[1] - e[0];
    let l = e[2] - e[1];
    assert_eq!(e[3] - e[0], l + 2 * m, "exponents {e:?} are not of torus shape");
    (l as u32, m as u32)
}

// ---------------------------------------------------------------------------
// Class groups by Dirichlet composition
// ---------------------------------------------------------------------------

/// An equivalent form whose first coefficient is prime to `n`.
fn with_first_coefficient_prime_to(f: QuadForm, n: i64) -> QuadForm {
    for bound in 1i64.. {
        for x in -bound..=bound {
            for y in -bound..=bound {
                if x.gcd(&y) != 1 {
                    continue;
                }
                let v = f.eval(x, y);
                if v.gcd(&n) == 1 {
                    // complete (x, y) to a matrix of determinant 1
                    let e = x.extended_gcd(&y);
                    let (s, r) = (e.x * e.gcd, -e.y * e.gcd);
                    debug_assert_eq!(x * s - r * y, 1);
                    return f.act([[x, r], [y, s]]);
                }
            }
        }
    }
    unreachable!()
}

/// Dirichlet composition: with coprime `a₁, a₂`, the product is
/// `(a₁a₂, B, ·)` for `B ≡ b₁ (2a₁)`, `B ≡ b₂ (2a₂)`, `B² ≡ d (4a₁a₂)`.
pub fn dirichlet_compose(f: QuadForm, g: QuadForm) -> QuadForm {
    let d = f.disc();
    let g = with_first_coefficient_prime_to(g, f.a);
    let (a1, a2) = (f.a, g.a);
    let n = a1 * a2;
    let b = (0..2 * n)
        .find(|&b| (b - f.b).rem_euclid(2 * a1) == 0 && (b - g.b).rem_euclid(2 * a2) == 0 && (b * b - d).rem_euclid(4 * n) == 0)
        .expect("Dirichlet's congruences are solvable");
    reduce(QuadForm::new(n, b, (b * b - d) / (4 * n))).unwrap()
}

/// `h(d) = −(w/(2|d|)) Σ_{a=1}^{|d|} χ_d(a)·a` for `d < 0`.
pub fn analytic_class_number(d: i64) -> i64 {
    let w = match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    };
    let s: i64 = (1..-d).map(|a| kronecker(d, a) as i64 * a).sum();
    let num = -w * s;
    assert_eq!(num % (2 * -d), 0);
    num / (2 * -d)
}
