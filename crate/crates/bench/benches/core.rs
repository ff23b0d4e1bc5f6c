use std::hint::black_box;

use bessel_core::exact_algebra::{rat, SymRat};
use bessel_core::local_nonarch::{classify_double_coset, macdonald_phi0, CosetIndex, SatakeParams};
use bessel_core::lvalues::twisted_central_value;
use bessel_core::modforms::{jacobi_index1, level1_cusp_eigenform};
use bessel_core::quadfields::{characters, class_group};
use bessel_core::verifier::{bessel_sum, checks, SuiteConfig};
use bessel_core::modforms::SKLift;
use criterion::{criterion_group, criterion_main, Criterion};

fn local(c: &mut Criterion) {
    let generic = SatakeParams::generic();
    c.bench_function("macdonald_phi0 symbolic h(2,1)", |b| {
        b.iter(|| macdonald_phi0(black_box(&generic), CosetIndex::new(2, 1)).unwrap())
    });
    let exact = SatakeParams::rational(SymRat::constant(rat(3, 1)), rat(2, 5), rat(-7, 3)).unwrap();
    c.bench_function("macdonald_phi0 rational h(4,4)", |b| {
        b.iter(|| macdonald_phi0(black_box(&exact), CosetIndex::new(4, 4)).unwrap())
    });
    let (x, y, z, u) = (rat(5, 27), rat(-2, 9), rat(7, 3), rat(3, 1));
    c.bench_function("classify_double_coset", |b| b.iter(|| classify_double_coset(&x, &y, black_box(&z), &u, 3).unwrap()));
    c.bench_function("coset sweep p = 3", |b| {
        let mut cfg = SuiteConfig::default().coset;
        cfg.primes = vec![3];
        cfg.units_per_cell = 1;
        b.iter(|| checks::coset_sweep(black_box(&cfg)))
    });
}

fn global(c: &mut Criterion) {
    c.bench_function("class_group(-4027)", |b| b.iter(|| class_group(black_box(-4027)).unwrap()));
    c.bench_function("jacobi_index1(10, 400)", |b| b.iter(|| jacobi_index1(10, black_box(400)).unwrap()));
    c.bench_function("level1_cusp_eigenform(18, 2000)", |b| b.iter(|| level1_cusp_eigenform(18, black_box(2000)).unwrap()));
    let g = level1_cusp_eigenform(18, 3000).unwrap();
    c.bench_function("twisted_central_value weight 18, d = -23", |b| {
        b.iter(|| twisted_central_value(&g, black_box(-23), 1e-10).unwrap())
    });
    let lift = SKLift::new(jacobi_index1(10, 200).unwrap());
    let grp = class_group(-199).unwrap();
    let chars = characters(&grp);
    c.bench_function("bessel_sum over all characters, d = -199", |b| {
        b.iter(|| chars.iter().for_each(|chi| {
            black_box(bessel_sum(&lift, &grp, chi).unwrap());
        }))
    });
}

criterion_group!(benches, local, global);
criterion_main!(benches);
