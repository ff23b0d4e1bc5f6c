//! Numerical L-values: central values of quadratic twists of level-1
//! eigenforms via the approximate functional equation, absolutely
//! convergent Dirichlet series, and the completed Riemann zeta function.
//!
//! L-functions are in the analytic normalization: for a level-1 eigenform
//! of weight `w` the coefficients are `a_n / n^{(w−1)/2}` and the
//! functional equation relates `s` and `1 − s`.

use statrs::function::gamma::{gamma, gamma_ur};
use thiserror::Error;

use crate::modforms::QExpansion;
use crate::quadfields::{is_fundamental, kronecker};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LValueError {
    #[error("{required} coefficients needed, {available} available")]
    InsufficientCoefficients { required: usize, available: usize },
    #[error("cutoffs disagree: {at_x} at X versus {at_2x} at 2X")]
    CutoffDisagreement { at_x: f64, at_2x: f64 },
    #[error("truncation bound {bound:e} is not below the tolerance for value {value}")]
    ToleranceNotMet { value: f64, bound: f64 },
    #[error("{0} is neither 1 nor a fundamental discriminant")]
    Discriminant(i64),
    #[error("form must have level 1 and even weight, got weight {weight} level {level}")]
    Form { weight: i64, level: u64 },
    #[error("s = {s} is too close to the abscissa {abscissa} of absolute convergence")]
    NearAbscissa { s: f64, abscissa: f64 },
}

/// A central value with its truncation bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CentralValue {
    pub value: f64,
    /// Rigorous bound on the discarded tail of the series (absolute).
    pub error_bound: f64,
    pub coefficients_used: usize,
    /// The smoothing parameter `X`; the value is also computed at `2X`.
    pub cutoff: f64,
    /// The value at `2X`.
    pub value_2x: f64,
    pub root_number: i32,
}

/// `Σ_{n>N} Q(a, c·n) ≤ ∫_N^∞ Q(a, c·x) dx = (a·Q(a+1, cN) − cN·Q(a, cN))/c`,
/// `Q` being the regularized upper incomplete gamma function, decreasing in
/// its second argument.
fn incomplete_gamma_tail(a: f64, c: f64, n: f64) -> f64 {
    let x = c * n;
    ((a * gamma_ur(a + 1.0, x) - x * gamma_ur(a, x)) / c).max(0.0)
}

/// Tail bound for the AFE truncated after `n` terms at smoothing `X`, using
/// Deligne's bound `|a_n| ≤ d(n) ≤ 2√n` on the normalized coefficients.
fn afe_tail(a: f64, cond: f64, x: f64, n: usize) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let slow = two_pi / (cond * x.max(1.0 / x));
    // |a_n|/√n ≤ 2, and each of the two incomplete gammas is at most the slower one
    4.0 * incomplete_gamma_tail(a, slow, n as f64)
}

/// Smallest `N` with tail bound below `target`.
fn afe_terms_needed(a: f64, cond: f64, x: f64, target: f64) -> usize {
    let mut n = 1usize;
    while afe_tail(a, cond, x, n) > target {
        n *= 2;
    }
    let (mut lo, mut hi) = (n / 2, n);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if afe_tail(a, cond, x, mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// The smoothing parameter `X`; values are compared at `X` and `2X`.
const SMOOTHING: f64 = 1.0;

/// Number of coefficients `a_0 … a_{N}` of a weight-`weight` form that
/// [`twisted_central_value`] needs for discriminant `d` and tolerance `tol`:
/// the truncated tail at `2X` must be below `tol/1000`.
pub fn afe_coefficients_needed(weight: i64, d: i64, tol: f64) -> usize {
    afe_terms_needed(weight as f64 / 2.0, d.unsigned_abs() as f64, 2.0 * SMOOTHING, tol * 1e-3) + 1
}

/// `L(1/2, g ⊗ χ_d)` by
/// `Σ_n (a_n χ_d(n)/√n)·[Q(w/2, 2πn/(|d|X)) + ε·Q(w/2, 2πnX/|d|)]`,
/// with root number `ε = χ_d(−1)(−1)^{w/2}`, at `X = 1` and `X = 2`.
///
/// `d = 1` gives the untwisted value. For `ε = −1` the value is exactly 0.
pub fn twisted_central_value(g: &QExpansion, d: i64, tol: f64) -> Result<CentralValue, LValueError> {
    if g.level != 1 || g.weight < 2 || g.weight % 2 != 0 {
        return Err(LValueError::Form { weight: g.weight, level: g.level });
    }
    if d != 1 && !is_fundamental(d) {
        return Err(LValueError::Discriminant(d));
    }
    let cond = d.unsigned_abs() as f64;
    let a = g.weight as f64 / 2.0;
    let eps = kronecker(d, -1) * if (g.weight / 2) % 2 == 0 { 1 } else { -1 };
    let (x1, x2) = (SMOOTHING, 2.0 * SMOOTHING);
    let required = afe_coefficients_needed(g.weight, d, tol);
    if g.len() < required {
        return Err(LValueError::InsufficientCoefficients { required, available: g.len() });
    }
    if eps == -1 {
        // the functional equation forces a zero at the centre
        return Ok(CentralValue { value: 0.0, error_bound: 0.0, coefficients_used: 0, cutoff: x1, value_2x: 0.0, root_number: eps });
    }
    let coeffs = g.truncate(required).normalized_f64();
    let two_pi = 2.0 * std::f64::consts::PI;
    let value_at = |x: f64| {
        let mut s = 0.0;
        for (n, an) in coeffs.iter().enumerate().skip(1) {
            let chi = kronecker(d, n as i64);
            if chi == 0 || *an == 0.0 {
                continue;
            }
            let nf = n as f64;
            let w = gamma_ur(a, two_pi * nf / (cond * x)) + eps as f64 * gamma_ur(a, two_pi * nf * x / cond);
            s += chi as f64 * an / nf.sqrt() * w;
        }
        s
    };
    let v1 = value_at(x1);
    let v2 = value_at(x2);
    let error_bound = afe_tail(a, cond, x2, required - 1);
    let scale = v1.abs().max(v2.abs());
    if error_bound >= tol * scale {
        return Err(LValueError::ToleranceNotMet { value: v1, bound: error_bound });
    }
    if (v1 - v2).abs() >= tol * scale {
        return Err(LValueError::CutoffDisagreement { at_x: v1, at_2x: v2 });
    }
    Ok(CentralValue { value: v1, error_bound, coefficients_used: required, cutoff: x1, value_2x: v2, root_number: eps })
}

/// Where the coefficients of a Dirichlet series come from.
#[derive(Clone, Copy, Debug)]
pub enum DirichletSource<'a> {
    /// `a_n = 1`.
    Zeta,
    /// Normalized coefficients `a_n` (index 0 ignored) with `|a_n| ≤ d(n)`,
    /// e.g. a Hecke eigenform in the analytic normalization.
    DivisorBounded(&'a [f64]),
}

/// Partial sum of `Σ a_n n^{−s}` and a rigorous bound on its tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

/// `Σ_{n>N} d(n) n^{−s} ≤ s·N^{1−s}·((log N + 1)/(s−1) + 1/(s−1)²)`, from
/// `Σ_{n≤x} d(n) ≤ x(log x + 1)` and partial summation.
fn divisor_tail(s: f64, n: f64) -> f64 {
    s * n.powf(1.0 - s) * ((n.ln() + 1.0) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)))
}

/// `Σ_{n ≤ N} a_n n^{−s}` with tail bound, for `N` terms.
pub fn dirichlet_partial(src: DirichletSource<'_>, s: f64, terms: usize) -> Result<SeriesValue, LValueError> {
    if s <= 1.0 + 1e-6 {
        return Err(LValueError::NearAbscissa { s, abscissa: 1.0 });
    }
    let n = terms as f64;
    match src {
        DirichletSource::Zeta => {
            // Euler–Maclaurin: the tail is N^{1−s}/(s−1) − N^{−s}/2 + sN^{−s−1}/12 + R
            // with |R| ≤ s(s+1)(s+2)N^{−s−3}/720
            let head: f64 = (1..=terms).rev().map(|k| (k as f64).powf(-s)).sum();
            let tail = n.powf(1.0 - s) / (s - 1.0) - n.powf(-s) / 2.0 + s * n.powf(-s - 1.0) / 12.0;
            let bound = s * (s + 1.0) * (s + 2.0) * n.powf(-s - 3.0) / 720.0;
            Ok(SeriesValue { value: head + tail, tail_bound: bound, terms })
        }
        DirichletSource::DivisorBounded(a) => {
            if a.len() <= terms {
                return Err(LValueError::InsufficientCoefficients { required: terms + 1, available: a.len() });
            }
            let head: f64 = (1..=terms).rev().map(|k| a[k] * (k as f64).powf(-s)).sum();
            Ok(SeriesValue { value: head, tail_bound: divisor_tail(s, n), terms })
        }
    }
}

/// `Σ a_n n^{−s}` to within `tol`, doubling the number of terms until the
/// tail bound is below `tol`.
pub fn dirichlet_series_value(src: DirichletSource<'_>, s: f64, tol: f64) -> Result<SeriesValue, LValueError> {
    let mut terms = 64;
    loop {
        let v = dirichlet_partial(src, s, terms)?;
        if v.tail_bound < tol {
            return Ok(v);
        }
        terms *= 2;
        if let DirichletSource::DivisorBounded(a) = src {
            if a.len() <= terms {
                // find how many terms would have sufficed
                let mut need = terms;
                while divisor_tail(s, need as f64) >= tol {
                    need *= 2;
                }
                return Err(LValueError::InsufficientCoefficients { required: need + 1, available: a.len() });
            }
        }
    }
}

/// `ζ_Q(s) = π^{−s/2} Γ(s/2) ζ(s)` for `s > 1`.
pub fn completed_zeta(s: f64) -> Result<f64, LValueError> {
    let z = dirichlet_series_value(DirichletSource::Zeta, s, 1e-15)?;
    Ok(std::f64::consts::PI.powf(-s / 2.0) * gamma(s / 2.0) * z.value)
}
