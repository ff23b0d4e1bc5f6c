use bessel_core::exact_algebra::{int, BigRat};
use bessel_core::modforms::{
    delta, divisor_sums, eisenstein, hecke_eigenvalue, jacobi_index1, level1_cusp_eigenform, parse_kohnen, parse_qexp,
    parse_siegel_table, sk_coefficient, SKLift, SiegelCoefficients,
};
use bessel_core::quadfields::QuadForm;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

fn to_int(x: &BigRat) -> BigInt {
    assert!(x.is_integer(), "{x} is not integral");
    x.to_integer()
}

#[test]
fn ramanujan_congruence_mod_691() {
    let d = delta(501);
    let sigma = divisor_sums(11, 501);
    for n in 1..=500 {
        let diff = to_int(d.coeff(n).unwrap()) - &sigma[n];
        assert!(diff.mod_floor(&BigInt::from(691)).is_zero(), "n = {n}");
    }
}

#[test]
fn small_tau_values() {
    let d = delta(11);
    let tau: Vec<i64> = (1..=10).map(|n| to_int(d.coeff(n).unwrap()).try_into().unwrap()).collect();
    assert_eq!(tau, [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]);
}

#[test]
fn hecke_multiplicativity_and_prime_powers() {
    for w in [12, 16, 18, 20, 22, 26] {
        let g = level1_cusp_eigenform(w, 201).unwrap();
        let a = |n: usize| to_int(g.coeff(n).unwrap());
        for m in 1..=200usize {
            for n in 1..=200 / m {
                if m.gcd(&n) == 1 {
                    assert_eq!(a(m * n), a(m) * a(n), "weight {w}, {m}·{n}");
                }
            }
        }
        for p in [2usize, 3, 5, 7, 11, 13] {
            let pw = BigInt::from(p).pow((w - 1) as u32);
            assert_eq!(a(p * p), a(p) * a(p) - pw, "weight {w}, p = {p}");
        }
        assert_eq!(hecke_eigenvalue(&g, 7).unwrap(), g.coeff(7).unwrap().clone());
    }
}

#[test]
fn eisenstein_products() {
    // E4² = E8 and E4·E6 = E10 in the one-dimensional spaces
    let n = 40;
    assert_eq!(eisenstein(4, n).unwrap().mul(&eisenstein(4, n).unwrap()), eisenstein(8, n).unwrap());
    assert_eq!(eisenstein(4, n).unwrap().mul(&eisenstein(6, n).unwrap()), eisenstein(10, n).unwrap());
}

#[test]
fn known_kohnen_coefficients() {
    // φ_{10,1} (whose lift is Igusa's χ₁₀) and φ_{12,1}
    let f10 = jacobi_index1(10, 12).unwrap();
    let want10 = [(3, 1), (4, -2), (7, -16), (8, 36), (11, 99), (12, -272)];
    for (d, c) in want10 {
        assert_eq!(f10.c(d).unwrap(), int(c), "φ10 c({d})");
    }
    let f12 = jacobi_index1(12, 8).unwrap();
    for (d, c) in [(3, 1), (4, 10), (7, -88), (8, -132)] {
        assert_eq!(f12.c(d).unwrap(), int(c), "φ12 c({d})");
    }
}

#[test]
fn theta_decomposition() {
    // c(n, r) depends only on 4n − r²
    let f = jacobi_index1(10, 60).unwrap();
    for n in 0..=15u64 {
        for r in -7i64..=7 {
            let d = 4 * n as i64 - r * r;
            if d < 0 {
                continue;
            }
            for s in [r + 2, r - 2, -r] {
                let n2 = (d + s * s) / 4;
                if (d + s * s) % 4 == 0 && n2 <= 15 {
                    assert_eq!(f.jacobi_coefficient(n, r).unwrap(), f.jacobi_coefficient(n2 as u64, s).unwrap());
                }
            }
        }
    }
}

#[test]
fn restriction_to_zero() {
    let n = 12;
    assert_eq!(jacobi_index1(4, 4 * n as u64).unwrap().restriction_to_zero(n).unwrap().coeffs, eisenstein(4, n).unwrap().coeffs);
    let r10 = jacobi_index1(10, 4 * n as u64).unwrap().restriction_to_zero(n).unwrap();
    assert!(r10.coeffs.iter().all(|c| c.is_zero()));
    let r12 = jacobi_index1(12, 4 * n as u64).unwrap().restriction_to_zero(n).unwrap();
    assert_eq!(r12.coeffs, delta(n).scale(&int(12)).coeffs);
}

#[test]
fn lift_coefficients_and_reduction() {
    let lift = SKLift::new(jacobi_index1(10, 48).unwrap());
    // Maass relation for T = 2·[[1, 1/2], [1/2, 1]]: c(12) + 2⁹·c(3)
    assert_eq!(sk_coefficient(&lift, QuadForm::new(2, 2, 2)).unwrap(), int(-272 + 512));
    // GL₂(Z)-equivalent forms share coefficients (k even)
    let a = lift.coefficient(QuadForm::new(2, 1, 3)).unwrap();
    assert_eq!(lift.coefficient(QuadForm::new(3, 1, 2)).unwrap(), a);
    assert_eq!(lift.coefficient(QuadForm::new(2, -1, 3)).unwrap(), a);
}

#[test]
fn ingestion() {
    let q = parse_qexp("# weight 12 level 1\n0 0\n1 1\n2 -24\n3 252\n").unwrap();
    assert!(q.has_header);
    assert_eq!(q.expansion.weight, 12);
    assert_eq!(q.expansion.coeffs, delta(4).coeffs);
    let bad = parse_qexp("1 1\n2 x\n").unwrap_err();
    assert!(bad.to_string().contains("line 2"), "{bad}");

    let k = parse_kohnen("3 1\n4 -2\n", 10).unwrap();
    assert_eq!(k.c(4).unwrap(), int(-2));
    assert!(parse_kohnen("5 1\n", 10).is_err(), "5 ≢ 0, 3 mod 4");

    let t = parse_siegel_table("# weight 10 level 1\n2 1 3 7\n1 1 1 1\n").unwrap();
    assert_eq!(t.coefficient(QuadForm::new(3, 1, 2)).unwrap(), int(7));
    assert!(parse_siegel_table("# weight 10 level 1\n2 1 3 7\n3 1 2 8\n").is_err(), "conflicting classes");
}
