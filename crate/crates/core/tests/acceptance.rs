//! Acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::time::Instant;

use bessel_core::exact_algebra::{int, BigRat, SymRat};
use bessel_core::local_nonarch::{classify_double_coset, macdonald_phi0, CosetIndex, SatakeParams};
use bessel_core::quadfields::{class_group, is_fundamental, QuadForm};
use bessel_core::verifier::{checks, run_check, CheckKind, SuiteConfig, VerificationReport};
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: &[VerificationReport], expected: usize) -> Outcome {
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    let pass = failed.is_empty() && reports.len() >= expected;
    let detail = match failed.first() {
        Some(r) => format!("{} of {} reports failed; first: {} {}", failed.len(), reports.len(), r.check, r.params),
        None => format!("{} reports", reports.len()),
    };
    Outcome { pass, detail }
}

fn merge(a: Outcome, b: Outcome) -> Outcome {
    Outcome { pass: a.pass && b.pass, detail: format!("{}; {}", a.detail, b.detail) }
}

fn only(kind: CheckKind) -> Vec<VerificationReport> {
    run_check(kind, &SuiteConfig::default())
}

fn random_rat(rng: &mut StdRng, bound: i64) -> BigRat {
    let n: i64 = rng.random_range(1..=bound) * if rng.random_bool(0.5) { 1 } else { -1 };
    BigRat::new(n.into(), rng.random_range(1..=bound).into())
}

/// Production evaluation at rational `q^{1/2}, α, β, γ` against the
/// Weyl-symmetrized oracle.
fn macdonald_draws(n: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let (mut done, mut skipped, mut bad) = (0, 0, Vec::new());
    while done < n {
        let r = BigRat::new(rng.random_range(2..=9).into(), rng.random_range(1..=3).into());
        let alpha = random_rat(&mut rng, 12);
        let s = random_rat(&mut rng, 12);
        let beta = &s * &s / &alpha;
        let gamma = if rng.random_bool(0.5) { BigRat::from_integer(1.into()) / &s } else { -BigRat::from_integer(1.into()) / &s };
        let (l, m) = (rng.random_range(0..=4), rng.random_range(0..=4));
        let Some(want) = common::macdonald_oracle(&r, &alpha, &beta, &gamma, l, m) else {
            skipped += 1;
            continue;
        };
        done += 1;
        let params = SatakeParams::new(
            SymRat::constant(r.clone()),
            SymRat::constant(alpha.clone()),
            SymRat::constant(beta.clone()),
            SymRat::constant(gamma.clone()),
        )
        .expect("αβγ² = 1 by construction");
        let got = macdonald_phi0(&params, CosetIndex::new(l as u32, m as u32)).ok().and_then(|v| v.as_constant());
        if got.as_ref() != Some(&want) && bad.len() < 3 {
            bad.push(format!("r={r} α={alpha} β={beta} γ={gamma} h({l},{m}): {got:?} vs {want}"));
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("{done} oracle draws ({skipped} singular skipped) {bad:?}") }
}

/// Classifier against determinantal divisors over the full valuation grid.
fn coset_grid() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for p in [3u64, 5] {
        let mut rng = StdRng::seed_from_u64(p * 31);
        let pp = int(p as i64);
        let unit = |rng: &mut StdRng| loop {
            let a: i64 = rng.random_range(-99..=99);
            let b: i64 = rng.random_range(1..=99);
            if a % p as i64 != 0 && b % p as i64 != 0 {
                return BigRat::new(a.into(), b.into());
            }
        };
        let vals: Vec<Option<i32>> = std::iter::once(None).chain((-3..=3).map(Some)).collect();
        for &vx in &vals {
            for &vy in &vals {
                for &vz in &vals {
                    for u in [int(1), pp.clone()] {
                        for _ in 0..3 {
                            let mut entry = |v: Option<i32>| match v {
                                None => int(0),
                                Some(v) => unit(&mut rng) * bessel_core::exact_algebra::rat_pow(&pp, v),
                            };
                            let (x, y, z) = (entry(vx), entry(vy), entry(vz));
                            total += 1;
                            let want = common::coset_from_exponents(&common::determinantal_exponents(
                                &checks::coset_matrix(&x, &y, &z, &u),
                                p,
                            ));
                            let got = classify_double_coset(&x, &y, &z, &u, p).ok().map(|c| (c.ell, c.m));
                            if got != Some(want) && bad.len() < 3 {
                                bad.push(format!("p={p} x={x} y={y} z={z} u={u}: {got:?} vs {want:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Outcome { pass: bad.is_empty() && total == 2 * 8 * 8 * 8 * 2 * 3, detail: format!("{total} cells×units {bad:?}") }
}

/// Class numbers, multiplication tables and element orders against
/// Dirichlet composition and the analytic class number formula.
fn class_group_oracle() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for d in (-200..=-3).rev().filter(|&d| is_fundamental(d)) {
        count += 1;
        let g = class_group(d).expect("fundamental");
        if g.order() as i64 != common::analytic_class_number(d) {
            bad.push(format!("h({d})"));
            continue;
        }
        let cls = g.classes();
        for i in 0..cls.len() {
            for j in 0..cls.len() {
                if common::dirichlet_compose(cls[i], cls[j]) != cls[g.mul(i, j)] {
                    bad.push(format!("{d}: {} ∘ {}", cls[i], cls[j]));
                }
            }
            // order by repeated composition against the order read off the
            // invariant-factor coordinates
            let principal = QuadForm::principal(d);
            let (mut f, mut ord) = (cls[i], 1u64);
            while f != principal {
                f = common::dirichlet_compose(f, cls[i]);
                ord += 1;
            }
            let from_coords =
                g.coords(i).iter().zip(g.invariant_factors()).fold(1u64, |acc, (&c, &n)| acc.lcm(&(n / c.gcd(&n))));
            if ord != from_coords {
                bad.push(format!("{d}: order of {}", cls[i]));
            }
        }
    }
    bad.truncate(3);
    Outcome { pass: bad.is_empty(), detail: format!("{count} discriminants against Dirichlet composition {bad:?}") }
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        (
            "unramified identity, type I, l = ±1",
            Box::new(|| {
                let r: Vec<_> = only(CheckKind::LocalUnram).into_iter().filter(|r| r.params["type"] == "I").collect();
                from_reports(&r, 2)
            }),
        ),
        (
            "unramified identity, type IIb",
            Box::new(|| {
                let r: Vec<_> = only(CheckKind::LocalUnram).into_iter().filter(|r| r.params["type"] == "IIb").collect();
                from_reports(&r, 1)
            }),
        ),
        ("P1 table, J0 and J columns", Box::new(|| from_reports(&only(CheckKind::LocalTable), 14))),
        (
            "Macdonald formula",
            Box::new(|| merge(from_reports(&only(CheckKind::Macdonald), 3), macdonald_draws(1000))),
        ),
        (
            "double coset classifier",
            Box::new(|| merge(from_reports(&only(CheckKind::CosetSweep), 2), coset_grid())),
        ),
        ("archimedean integral", Box::new(|| from_reports(&only(CheckKind::ArchQuadrature), 5))),
        ("constant assembly, k = 3..40", Box::new(|| from_reports(&only(CheckKind::ConstantAssembly), 38))),
        ("Saito–Kurokawa ratios, k = 10", Box::new(|| from_reports(&only(CheckKind::SkRatio), 28))),
        ("exact vanishing for nontrivial characters", Box::new(|| from_reports(&only(CheckKind::SkVanishing), 1))),
        (
            "class group engine",
            Box::new(|| merge(from_reports(&only(CheckKind::ClassGroup), 1), class_group_oracle())),
        ),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        all &= o.pass;
        println!(
            "criterion {:>2}: {} — {name} ({:.1} s) [{}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if !all {
        std::process::exit(1);
    }
}
