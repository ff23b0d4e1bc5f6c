use std::collections::BTreeMap;
use std::f64::consts::PI;

use bessel_core::local_arch::{gamma_factors, j_infty};
use bessel_core::local_nonarch::{ReprClass, ReprType};
use bessel_core::verifier::{tmain_rhs, VerifierError};

fn reprs(entries: &[(u64, ReprType)]) -> BTreeMap<u64, ReprClass> {
    entries.iter().map(|&(p, t)| (p, ReprClass::of(t))).collect()
}

#[test]
fn tmain_rhs_value() {
    // N = 3 (IIIa), d = −4 (inert at 3), k = 10, strong lift
    let got = tmain_rhs(10, 3, &reprs(&[(3, ReprType::IIIa)]), -4, 0.5, false).unwrap();
    let jp = (1.0 + 1.0 / 9.0) * (1.0 + 1.0 / 3.0);
    let want = 2f64.powi(14) * 16.0 * 4f64.powi(9) * jp * 0.5;
    assert!((got - want).abs() < 1e-12 * want);
    // weak Yoshida halves the power of two; VIb doubles J_p
    let weak = tmain_rhs(10, 3, &reprs(&[(3, ReprType::VIb)]), -4, 0.5, true).unwrap();
    assert!((weak - want).abs() < 1e-12 * want);
    // N = 1 has no local factors
    let n1 = tmain_rhs(10, 1, &BTreeMap::new(), -3, 1.0, false).unwrap();
    assert!((n1 - 2f64.powi(14) * 36.0 * 3f64.powi(9)).abs() < 1e-6);
    // other ramified types contribute zero
    assert_eq!(tmain_rhs(10, 3, &reprs(&[(3, ReprType::IIa)]), -4, 1.0, false).unwrap(), 0.0);
}

#[test]
fn tmain_rhs_contract() {
    let r3 = reprs(&[(3, ReprType::IIIa)]);
    assert!(matches!(tmain_rhs(10, 6, &r3, -4, 1.0, false), Err(VerifierError::Level(6))));
    assert!(matches!(tmain_rhs(10, 9, &r3, -4, 1.0, false), Err(VerifierError::Level(9))));
    assert!(matches!(tmain_rhs(10, 15, &r3, -4, 1.0, false), Err(VerifierError::PrimeMismatch { .. })));
    assert!(matches!(tmain_rhs(10, 3, &r3, -12, 1.0, false), Err(VerifierError::Discriminant(-12))));
    assert!(matches!(tmain_rhs(10, 3, &r3, 5, 1.0, false), Err(VerifierError::Discriminant(5))));
    // −11 ≡ 1 mod 3 is split at 3
    assert!(matches!(tmain_rhs(10, 3, &r3, -11, 1.0, false), Err(VerifierError::NotInert { d: -11, p: 3 })));
}

#[test]
fn j_infty_matches_direct_formula() {
    for k in [3i64, 4, 10, 20] {
        for d in [-3i64, -4, -7, -8, -15, -20, -23] {
            let tr = if d % 4 == 0 { -d as f64 / 4.0 + 1.0 } else { (1 - d) as f64 / 4.0 + 1.0 };
            let want_ln = (4 * k - 4) as f64 * 2f64.ln() + (k as f64 - 1.5) * (-d as f64 / 4.0).ln() - 4.0 * PI * tr;
            let got = j_infty(k, d).unwrap().j_infty_over_vol;
            assert!((got.ln_abs() - want_ln).abs() < 1e-10, "k = {k}, d = {d}");
        }
    }
    assert!(j_infty(2, -3).is_err());
    assert!(j_infty(10, -12).is_err());
}

#[test]
fn gamma_factor_ratio() {
    // L∞(1/2)/L∞(1, Ad) = 2^{-1}(2π)^{2k+1}/Γ(2k−1)
    for k in [3i64, 7, 15] {
        let g = gamma_factors(k);
        let lgamma: f64 = (1..=2 * k - 2).map(|i| (i as f64).ln()).sum();
        let want = -(2f64.ln()) + (2 * k + 1) as f64 * (2.0 * PI).ln() - lgamma;
        assert!((g.ratio.ln_abs() - want).abs() < 1e-10, "k = {k}");
    }
}

#[test]
fn sk_ratio_with_file_overrides() {
    use bessel_core::modforms::{jacobi_index1, level1_cusp_eigenform};
    use bessel_core::verifier::{checks, SkConfig};

    let dir = std::env::temp_dir().join(format!("bessel-sk-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = level1_cusp_eigenform(18, 400).unwrap();
    let qexp: String = std::iter::once("# weight 18 level 1\n".to_string())
        .chain(g.coeffs.iter().enumerate().map(|(n, a)| format!("{n} {a}\n")))
        .collect();
    let kohnen: String = jacobi_index1(10, 24).unwrap().iter().map(|(d, c)| format!("{d} {c}\n")).collect();
    std::fs::write(dir.join("g.txt"), &qexp).unwrap();
    std::fs::write(dir.join("k.txt"), &kohnen).unwrap();
    std::fs::write(dir.join("bad.txt"), qexp.replace("weight 18", "weight 20")).unwrap();

    let cfg = SkConfig {
        discriminants: vec![-3, -7, -8],
        qexp: Some(dir.join("g.txt")),
        kohnen: Some(dir.join("k.txt")),
        ..SkConfig::default()
    };
    let reports = checks::sk_ratio(&cfg);
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| r.pass), "{reports:?}");

    // a wrong Kohnen coefficient breaks the ratio
    std::fs::write(dir.join("k.txt"), kohnen.replace("7 -16\n", "7 -17\n")).unwrap();
    assert!(checks::sk_ratio(&cfg).iter().any(|r| !r.pass));

    let bad = SkConfig { qexp: Some(dir.join("bad.txt")), kohnen: None, ..cfg };
    let r = checks::sk_ratio(&bad);
    assert!(r.len() == 1 && !r[0].pass && r[0].lhs.contains("weight 18"), "{r:?}");
    std::fs::remove_dir_all(&dir).ok();
}
