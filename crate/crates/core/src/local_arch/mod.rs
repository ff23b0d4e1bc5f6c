//! The archimedean factor for holomorphic discrete series of weight `k > 2`
//! against the Bessel model attached to `S(d)`.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;
use thiserror::Error;

use crate::exact_algebra::{int, rat, BigRat, ClosedForm};
use crate::quadfields::{is_fundamental, trace_s};
use crate::verifier::VerificationReport;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ArchError {
    #[error("weight {0} is not > 2")]
    Weight(i64),
    #[error("{0} is not a negative fundamental discriminant")]
    Discriminant(i64),
    #[error("quadrature did not converge: estimated error {0:e}")]
    NoConvergence(f64),
}

/// `J_∞ / vol(R^×\T_S(R))` for weight `k` and discriminant `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct ArchResult {
    pub k: i64,
    pub d: i64,
    pub j_infty_over_vol: ClosedForm,
    pub trace_s: BigRat,
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `2^{4k−4}·(|d|/4)^{k−3/2}·e^{−4π Tr S(d)}`.
pub fn j_infty(k: i64, d: i64) -> Result<ArchResult, ArchError> {
    if k <= 2 {
        return Err(ArchError::Weight(k));
    }
    if d >= 0 || !is_fundamental(d) {
        return Err(ArchError::Discriminant(d));
    }
    let x = rat(-d, 4);
    let tr = trace_s(d);
    let two = int(2);
    let value = ClosedForm::rational(crate::exact_algebra::rat_pow(&two, (4 * k - 4) as i32))
        .mul(&ClosedForm::rational(crate::exact_algebra::rat_pow(&x, (k - 2) as i32)))
        .mul(&ClosedForm::sqrt(&x))
        .mul(&ClosedForm::exp_pi(-&tr * int(4)));
    Ok(ArchResult { k, d, j_infty_over_vol: value, trace_s: tr })
}

/// The archimedean L-factor values `L_∞(1/2, π × AI(Λ⁻¹))`, `L_∞(1, π, Ad)`
/// and their ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaFactors {
    pub linf_half: ClosedForm,
    pub linf_ad: ClosedForm,
    pub ratio: ClosedForm,
}

/// `L_∞(1/2) = 2⁴(2π)^{−2k}Γ(k−1)²`, `L_∞(1, Ad) = 2⁵(2π)^{−4k−1}Γ(k−1)²Γ(2k−1)`.
pub fn gamma_factors(k: i64) -> GammaFactors {
    let two_pi = |e: i32| {
        ClosedForm::rational(crate::exact_algebra::rat_pow(&int(2), e)).mul(&ClosedForm::pi_pow(e))
    };
    let g_k1 = BigRat::from_integer(factorial(k - 2));
    let g_2k1 = BigRat::from_integer(factorial(2 * k - 2));
    let linf_half = two_pi(-2 * k as i32).scale(&(int(16) * &g_k1 * &g_k1));
    let linf_ad = two_pi(-4 * k as i32 - 1).scale(&(int(32) * &g_k1 * &g_k1 * &g_2k1));
    let ratio = linf_half.div(&linf_ad);
    GammaFactors { linf_half, linf_ad, ratio }
}

/// `(2π)^{k−1/2} e^{−4π} / Γ(k−1/2)`, using
/// `Γ(k−1/2) = (2k−2)!√π / (4^{k−1}(k−1)!)`:
/// the result is `2^{3k−2}(k−1)!/(2k−2)! · π^{k−1} · e^{−4π} / √2`.
pub fn arch_integral_closed_form(k: i64) -> ClosedForm {
    let c = crate::exact_algebra::rat_pow(&int(2), (3 * k - 2) as i32) * BigRat::from_integer(factorial(k - 1))
        / BigRat::from_integer(factorial(2 * k - 2));
    ClosedForm::rational(c)
        .mul(&ClosedForm::sqrt(&rat(1, 2)))
        .mul(&ClosedForm::pi_pow((k - 1) as i32))
        .mul(&ClosedForm::exp_pi(int(-4)))
}

/// Numerical value of `∫_R (2 − ix)^{−ν} e^{−2πix} dx` with `ν = k − 1/2`.
#[derive(Clone, Copy, Debug)]
pub struct Quadrature {
    pub value: f64,
    /// Estimated absolute error of the finite part.
    pub quad_error: f64,
    /// Cut point `T` where the finite part ends.
    pub cutoff: f64,
    /// Contribution of `|x| > T`, from the asymptotic expansion.
    pub tail: f64,
    /// Size of the first omitted term of that expansion.
    pub tail_bound: f64,
}

/// The integrand is conjugate-symmetric, so the integral is
/// `2∫₀^∞ (4+x²)^{−ν/2} cos(ν·atan(x/2) − 2πx) dx`. The range `[0, T]` is
/// integrated panel by panel (unit panels, period of the oscillation) with
/// tanh-sinh quadrature; for the tail, repeated integration by parts at the
/// integer `T` gives `∫_T^∞ g e^{−2πix} = Σ_j g^{(j)}(T)/(2πi)^{j+1}` with
/// `g^{(j)}(x) = (−ν)_j (−i)^j (2 − ix)^{−ν−j}` (falling factorial).
pub fn arch_integral_numeric(k: i64, tol: f64) -> Result<Quadrature, ArchError> {
    use num_complex::Complex64;
    let nu = k as f64 - 0.5;
    let f = |x: f64| (4.0 + x * x).powf(-nu / 2.0) * (nu * (x / 2.0).atan() - 2.0 * std::f64::consts::PI * x).cos();
    let cutoff: u32 = 40;
    let scale = 2f64.powf(-nu);
    let panel_tol = (tol * 1e-3 * scale / cutoff as f64).max(1e-300);
    let mut finite = 0.0;
    let mut quad_error = 0.0;
    for n in 0..cutoff {
        let out = quadrature::double_exponential::integrate(f, n as f64, (n + 1) as f64, panel_tol);
        finite += out.integral;
        quad_error += out.error_estimate;
    }

    let t = cutoff as f64;
    let z = Complex64::new(2.0, -t);
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let minus_i = Complex64::new(0.0, -1.0);
    let mut tail = Complex64::new(0.0, 0.0);
    // coefficient (−ν)_j (−i)^j / (2πi)^{j+1}
    let mut coeff = Complex64::new(1.0, 0.0) / two_pi_i;
    let mut last = f64::INFINITY;
    let mut tail_bound = f64::INFINITY;
    for j in 0..60 {
        let term = coeff * z.powc(Complex64::new(-nu - j as f64, 0.0));
        let size = term.norm();
        if size > last {
            tail_bound = last;
            break;
        }
        tail += term;
        last = size;
        tail_bound = size;
        if size < 1e-30 * scale {
            break;
        }
        coeff = coeff * (-nu - j as f64) * minus_i / two_pi_i;
    }
    let value = 2.0 * (finite + tail.re);
    let quad_error = 2.0 * quad_error;
    let tail_bound = 2.0 * tail_bound;
    if !(quad_error + tail_bound <= tol * value.abs()) {
        return Err(ArchError::NoConvergence(quad_error + tail_bound));
    }
    Ok(Quadrature { value, quad_error, cutoff: t, tail: 2.0 * tail.re, tail_bound })
}

/// Compare the quadrature with `(2π)^{k−1/2} e^{−4π}/Γ(k−1/2)`, optionally
/// scaling the right side (to exercise the detector).
pub fn arch_quadrature_check_scaled(k: i64, tol: f64, rhs_scale: f64) -> Result<VerificationReport, ArchError> {
    if k < 3 {
        return Err(ArchError::Weight(k));
    }
    let q = arch_integral_numeric(k, tol * 1e-2)?;
    let rhs = arch_integral_closed_form(k).to_f64() * rhs_scale;
    let rel_err = ((q.value - rhs) / rhs).abs();
    Ok(VerificationReport::numeric(
        "arch-quadrature",
        q.value,
        rhs,
        rel_err,
        tol,
        json!({
            "k": k,
            "cutoff": q.cutoff,
            "tail": q.tail,
            "tail_bound": q.tail_bound,
            "quad_error": q.quad_error,
        }),
    ))
}

/// Quadrature check of the archimedean integral identity.
pub fn arch_quadrature_check(k: i64, tol: f64) -> Result<VerificationReport, ArchError> {
    arch_quadrature_check_scaled(k, tol, 1.0)
}

/// `2^{2k−6}·ratio(k)` and `2^{4k−6}π^{2k+1}/(2k−2)!` (the two displayed
/// forms of the conjectural constant), exactly.
pub fn constant_assembly(k: i64) -> (ClosedForm, ClosedForm) {
    let lhs = gamma_factors(k)
        .ratio
        .scale(&crate::exact_algebra::rat_pow(&int(2), (2 * k - 6) as i32));
    let rhs = crate::verifier::boecherer_constant(k);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let r = j_infty(10, -4).unwrap();
        assert_eq!(r.trace_s, int(2));
        let want = ClosedForm::rational(crate::exact_algebra::rat_pow(&int(2), 36)).mul(&ClosedForm::exp_pi(int(-8)));
        assert_eq!(r.j_infty_over_vol, want);
        let r = j_infty(10, -3).unwrap();
        assert_eq!(r.trace_s, int(2));
        let want_f = 2f64.powi(36) * 0.75f64.powf(8.5) * (-8.0 * std::f64::consts::PI).exp();
        assert!((r.j_infty_over_vol.to_f64() / want_f - 1.0).abs() < 1e-13);
        let r = j_infty(3, -4).unwrap();
        assert_eq!(r.j_infty_over_vol, ClosedForm::rational(int(256)).mul(&ClosedForm::exp_pi(int(-8))));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(j_infty(2, -4).unwrap_err(), ArchError::Weight(2));
        assert_eq!(j_infty(10, -12).unwrap_err(), ArchError::Discriminant(-12));
        assert_eq!(j_infty(10, 5).unwrap_err(), ArchError::Discriminant(5));
    }

    #[test]
    fn gamma_ratio_k10() {
        let g = gamma_factors(10);
        let want = ClosedForm::rational(crate::exact_algebra::rat_pow(&int(2), 20) / BigRat::from_integer(factorial(18)))
            .mul(&ClosedForm::pi_pow(21));
        assert_eq!(g.ratio, want);
    }

    #[test]
    fn closed_form_matches_gamma_function() {
        for k in [3, 4, 10, 20] {
            let nu = k as f64 - 0.5;
            let want = (nu * (2.0 * std::f64::consts::PI).ln() - 4.0 * std::f64::consts::PI - statrs::function::gamma::ln_gamma(nu)).exp();
            let got = arch_integral_closed_form(k).to_f64();
            assert!((got / want - 1.0).abs() < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn quadrature_agrees_and_detects() {
        let r = arch_quadrature_check(10, 1e-6).unwrap();
        assert!(r.pass, "{r:?}");
        let r = arch_quadrature_check_scaled(10, 1e-6, 1.0 + 1e-3).unwrap();
        assert!(!r.pass);
    }
}
