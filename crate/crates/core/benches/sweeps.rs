use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use mvlab::amop::{verify_theorem, Theorem};
use mvlab::crystal::{generate, MvCrystal, SimplyLaced};
use mvlab::exec::Exec;
use mvlab::preproj::{build_preprojective, Orientation};
use mvlab::rootsys::RootSystem;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn d4() -> SimplyLaced {
    SimplyLaced::new(Arc::new(RootSystem::from_label("D4", false).unwrap())).unwrap()
}

fn bench_generate(c: &mut Criterion) {
    let cr = d4();
    let mut group = c.benchmark_group("generate D4 depth 5");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| generate(&cr, 5, exec).unwrap()));
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let cr = d4();
    let set = generate(&cr, 4, Exec::default()).unwrap();
    let mut group = c.benchmark_group("thm31 D4 depth 4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_theorem(&cr, &set, Theorem::Thm31, exec))
        });
    }
    group.finish();
}

fn bench_bz_from_module(c: &mut Criterion) {
    let cr = d4();
    let alg = build_preprojective(cr.root_system(), Orientation::Standard).unwrap();
    let s2 = alg.simple(1);
    let x = alg.extension(0, 1).unwrap().direct_sum(&s2).unwrap();
    alg.n_modules().unwrap();
    let mut group = c.benchmark_group("bz_from_module D4");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| alg.bz_from_module(&x, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_generate, bench_verify, bench_bz_from_module);
criterion_main!(benches);
