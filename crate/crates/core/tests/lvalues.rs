use std::f64::consts::PI;

use bessel_core::lvalues::{
    completed_zeta, dirichlet_partial, dirichlet_series_value, twisted_central_value, DirichletSource,
};
use bessel_core::modforms::{jacobi_index1, level1_cusp_eigenform};
use bessel_core::quadfields::{class_number, l_one_numeric, w_of};
use num_traits::ToPrimitive;

/// Kohnen–Zagier: `c(|D|)² / (|D|^{k−3/2}·L(1/2, g ⊗ χ_D))` does not depend
/// on `D`. The Kohnen coefficients and the central values are computed
/// independently of each other.
fn kohnen_zagier_constancy(k: i64) {
    let ds = [-3i64, -4, -7, -8, -11, -15, -19, -20, -23, -24];
    let g = level1_cusp_eigenform(2 * k - 2, 2000).unwrap();
    let kohnen = jacobi_index1(k, 24).unwrap();
    let mut ratios = Vec::new();
    for d in ds {
        let c = kohnen.c(d.unsigned_abs()).unwrap().to_f64().unwrap();
        let l = twisted_central_value(&g, d, 1e-10).unwrap().value;
        if c == 0.0 {
            assert!(l.abs() < 1e-8, "k = {k}, d = {d}: c = 0 but L = {l}");
            continue;
        }
        ratios.push((d, c * c / ((-d) as f64).powf(k as f64 - 1.5) / l));
    }
    let r0 = ratios[0].1;
    for (d, r) in &ratios {
        assert!(((r - r0) / r0).abs() < 1e-8, "k = {k}, d = {d}: {r} vs {r0}");
    }
}

#[test]
fn kohnen_zagier_weight_10() {
    kohnen_zagier_constancy(10);
}

#[test]
fn kohnen_zagier_weight_12() {
    kohnen_zagier_constancy(12);
}

#[test]
fn vanishing_sign() {
    // weight 20 twisted by an imaginary quadratic character has root number −1
    let g = level1_cusp_eigenform(20, 500).unwrap();
    let v = twisted_central_value(&g, -7, 1e-8).unwrap();
    assert_eq!(v.root_number, -1);
    assert!(v.value.abs() < 1e-8);
}

#[test]
fn central_value_is_stable_in_tolerance() {
    let g = level1_cusp_eigenform(18, 3000).unwrap();
    let a = twisted_central_value(&g, -23, 1e-6).unwrap();
    let b = twisted_central_value(&g, -23, 1e-11).unwrap();
    assert!((a.value - b.value).abs() <= a.error_bound + b.error_bound + 1e-6 * b.value.abs());
    assert!(b.coefficients_used >= a.coefficients_used);
}

#[test]
fn zeta_values() {
    let z2 = dirichlet_series_value(DirichletSource::Zeta, 2.0, 1e-12).unwrap();
    assert!((z2.value - PI * PI / 6.0).abs() < 1e-12);
    // Σ d(n) n^{-3} = ζ(3)²
    let divisors: Vec<f64> = (0..20000u64).map(|n| if n == 0 { 0.0 } else { (1..=n).filter(|d| n % d == 0).count() as f64 }).collect::<Vec<_>>();
    let z3 = 1.202_056_903_159_594_2_f64;
    let s = dirichlet_partial(DirichletSource::DivisorBounded(&divisors), 3.0, 19999).unwrap();
    assert!((s.value - z3 * z3).abs() <= s.tail_bound, "{} vs {}", s.value, z3 * z3);
    // π^{−3/2}Γ(3/2)ζ(3) = ζ(3)/(2π)
    assert!((completed_zeta(3.0).unwrap() - z3 / (2.0 * PI)).abs() < 1e-12);
    assert!(completed_zeta(0.7).is_err());
}

#[test]
fn divisor_series_cutoff_consistency() {
    let divisors: Vec<f64> = (0..4001u64).map(|n| if n == 0 { 0.0 } else { (1..=n).filter(|d| n % d == 0).count() as f64 }).collect();
    let n = dirichlet_partial(DirichletSource::DivisorBounded(&divisors), 1.5, 2000).unwrap();
    let n2 = dirichlet_partial(DirichletSource::DivisorBounded(&divisors), 1.5, 4000).unwrap();
    assert!((n.value - n2.value).abs() <= n.tail_bound);
    assert!(n2.tail_bound < n.tail_bound);
}

#[test]
fn l_one_against_class_number_formula() {
    for d in [-3i64, -4, -7, -8, -23, -47, -71, -104, -191] {
        let want = 2.0 * PI * class_number(d) as f64 / (w_of(d) as f64 * ((-d) as f64).sqrt());
        assert!((l_one_numeric(d) - want).abs() < 1e-10, "d = {d}");
    }
}

#[test]
fn l_three_halves_of_weight_18_form() {
    let g = level1_cusp_eigenform(18, 2001).unwrap();
    let a = g.normalized_f64();
    let n = dirichlet_partial(DirichletSource::DivisorBounded(&a), 1.5, 1000).unwrap();
    let n2 = dirichlet_partial(DirichletSource::DivisorBounded(&a), 1.5, 2000).unwrap();
    assert!((n.value - n2.value).abs() <= n.tail_bound);
    // truncated Euler product Π_p (1 − ã_p p^{−s} + p^{−2s})^{−1}
    let euler: f64 = (2..2000usize)
        .filter(|&p| (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0))
        .map(|p| 1.0 / (1.0 - a[p] * (p as f64).powf(-1.5) + (p as f64).powf(-3.0)))
        .product();
    assert!((euler - n2.value).abs() < 0.02 * n2.value.abs(), "{euler} vs {}", n2.value);
}
