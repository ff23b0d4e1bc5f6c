//! Global assembly: the right side of the main period formula and the
//! Saito–Kurokawa ratio test.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::json;

use super::{bessel_sum, VerificationReport, VerifierError};
use crate::exact_algebra::{int, rat_pow, BigRat};
use crate::local_nonarch::{jp_global, ReprClass};
use crate::lvalues::{afe_coefficients_needed, twisted_central_value};
use crate::modforms::{jacobi_index1, level1_cusp_eigenform, KohnenForm, QExpansion, SKLift};
use crate::quadfields::{characters, class_group, kronecker, l_one_numeric, w_of};

/// `2^{2k−s}·w(K)²·|d|^{k−1}·lvalue_ratio·∏_{p|N} J_p`, with `s = 7` for a
/// weak Yoshida lift and `6` otherwise.
///
/// `N` must be odd and squarefree, `repr_by_prime` must name exactly its
/// prime divisors, and `(d/p) = −1` for each of them.
pub fn tmain_rhs(
    k: i64,
    n: u64,
    repr_by_prime: &BTreeMap<u64, ReprClass>,
    d: i64,
    lvalue_ratio: f64,
    weak_yoshida: bool,
) -> Result<f64, VerifierError> {
    let primes = prime_factors(n);
    if n.is_multiple_of(2) || primes.iter().any(|&(_, e)| e > 1) {
        return Err(VerifierError::Level(n));
    }
    let listed: Vec<u64> = repr_by_prime.keys().copied().collect();
    let wanted: Vec<u64> = primes.iter().map(|&(p, _)| p).collect();
    if listed != wanted {
        return Err(VerifierError::PrimeMismatch { level: n, primes: listed });
    }
    if d >= 0 || !crate::quadfields::is_fundamental(d) {
        return Err(VerifierError::Discriminant(d));
    }
    for &p in &wanted {
        if kronecker(d, p as i64) != -1 {
            return Err(VerifierError::NotInert { d, p });
        }
    }
    let s = if weak_yoshida { 7 } else { 6 };
    let w = w_of(d);
    let mut exact = rat_pow(&int(2), (2 * k - s) as i32) * int(w * w) * rat_pow(&int(-d), (k - 1) as i32);
    for (&p, repr) in repr_by_prime {
        exact *= jp_global(repr, p)?;
    }
    Ok(exact.to_f64().unwrap_or(f64::NAN) * lvalue_ratio)
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The inputs of the Saito–Kurokawa ratio test: the elliptic eigenform `g`
/// of weight `2k−2` and the Kohnen form whose lift is `F`.
#[derive(Clone, Debug)]
pub struct SkData {
    pub k: i64,
    pub g: QExpansion,
    pub kohnen: KohnenForm,
}

impl SkData {
    /// Build `g` and the Kohnen form for weight `k ∈ {10, 12}` with enough
    /// coefficients for the discriminants `ds` at AFE tolerance `afe_tol`.
    pub fn build(k: i64, ds: &[i64], afe_tol: f64) -> Result<Self, VerifierError> {
        if !matches!(k, 10 | 12) {
            return Err(VerifierError::Weight(k));
        }
        let len = ds.iter().map(|&d| afe_coefficients_needed(2 * k - 2, d, afe_tol)).max().unwrap_or(2);
        let d_max = ds.iter().map(|d| d.unsigned_abs()).max().unwrap_or(4);
        Ok(Self { k, g: level1_cusp_eigenform(2 * k - 2, len)?, kohnen: jacobi_index1(k, d_max)? })
    }
}

/// Per-discriminant ingredients of the ratio test.
#[derive(Clone, Debug)]
struct SkSide {
    r: BigRat,
    l_half: f64,
    l_one: f64,
    weight: f64,
}

fn sk_side(data: &SkData, d: i64, afe_tol: f64) -> Result<SkSide, VerifierError> {
    let group = class_group(d)?;
    let chars = characters(&group);
    let lift = SKLift::new(data.kohnen.clone());
    let r = bessel_sum(&lift, &group, &chars[0])?
        .value
        .as_rational()
        .expect("trivial character gives a rational sum");
    let l_half = twisted_central_value(&data.g, d, afe_tol)?.value;
    let l_one = l_one_numeric(d);
    let w = w_of(d) as f64;
    let k = data.k as f64;
    // w²|d|^{k−1/2}·L(1/2)·L(1, χ)², kept in logarithms for the power
    let weight = (2.0 * w.ln() + (k - 0.5) * (d.unsigned_abs() as f64).ln()).exp() * l_half * l_one * l_one;
    Ok(SkSide { r, l_half, l_one, weight })
}

/// Compare `|R(F,K₁,1)|²/|R(F,K₂,1)|²` (exact, from the lift's
/// coefficients) with
/// `w₁²|d₁|^{k−1/2}L(1/2, π₀×χ_{d₁})L(1, χ_{d₁})² / (same for d₂)`.
///
/// A central value below `10·tol` makes the ratio ill-conditioned; such a
/// case is reported with `params.degenerate = true` and not failed.
pub fn sk_ratio_check_with(data: &SkData, d1: i64, d2: i64, tol: f64, afe_tol: f64) -> VerificationReport {
    let params = json!({ "k": data.k, "d1": d1, "d2": d2, "afe_tol": afe_tol, "coefficients": data.g.len() });
    let sides = [d1, d2].par_iter().map(|&d| sk_side(data, d, afe_tol)).collect::<Result<Vec<_>, _>>();
    let (a, b) = match sides {
        Ok(v) => (v[0].clone(), v[1].clone()),
        Err(e) => return VerificationReport::error("sk-ratio", e.to_string(), params),
    };
    let mut params = params;
    params["R1"] = json!(a.r.to_string());
    params["R2"] = json!(b.r.to_string());
    params["L_half"] = json!([a.l_half, b.l_half]);
    params["L_one"] = json!([a.l_one, b.l_one]);
    if a.l_half.abs() < 10.0 * tol || b.l_half.abs() < 10.0 * tol || b.r.is_zero() {
        params["degenerate"] = json!(true);
        let mut r = VerificationReport::numeric("sk-ratio", 0.0, 0.0, 0.0, tol, params);
        r.lhs = format!("{}²/{}²", a.r, b.r);
        return r;
    }
    let lhs_exact = (&a.r * &a.r) / (&b.r * &b.r);
    let lhs = lhs_exact.to_f64().unwrap_or(f64::NAN);
    let rhs = a.weight / b.weight;
    let rel_err = super::relative_error(lhs, rhs);
    let mut r = VerificationReport::numeric("sk-ratio", lhs, rhs, rel_err, tol, params);
    r.params["lhs_exact"] = json!(lhs_exact.to_string());
    r
}

/// [`sk_ratio_check_with`] building the forms for `(d1, d2)`; the AFE runs
/// at `tol/100`.
pub fn sk_ratio_check(k: i64, d1: i64, d2: i64, tol: f64) -> Result<VerificationReport, VerifierError> {
    let afe_tol = tol * 1e-2;
    let data = SkData::build(k, &[d1, d2], afe_tol)?;
    Ok(sk_ratio_check_with(&data, d1, d2, tol, afe_tol))
}
