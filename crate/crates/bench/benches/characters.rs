use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use m0nr_core::charformula::character_of;
use m0nr_core::cycleindex::{chr_index, z_extended, z_lambda_prime};
use m0nr_core::oracle::{Algebra, BuildOptions, Kind};
use m0nr_core::symfunc::{make_arcsinh, make_sinh, plethysm};
use m0nr_core::{CycleType, Partition};

fn product_formula(c: &mut Criterion) {
    let mut g = c.benchmark_group("character table");
    for n in [10usize, 20, 30] {
        let classes: Vec<CycleType> = Partition::all_of(n).iter().map(CycleType::from_partition).collect();
        g.bench_with_input(BenchmarkId::from_parameter(n), &classes, |b, classes| {
            b.iter(|| classes.iter().map(|ct| character_of(black_box(ct)).unwrap()).count())
        });
    }
    g.finish();
}

fn cycle_indices(c: &mut Criterion) {
    let mut g = c.benchmark_group("cycle index");
    g.sample_size(10);
    for pbound in [6usize, 8, 10] {
        g.bench_with_input(BenchmarkId::new("lambda-prime", pbound), &pbound, |b, &p| b.iter(|| z_lambda_prime(p)));
        g.bench_with_input(BenchmarkId::new("extended", pbound), &pbound, |b, &p| b.iter(|| z_extended(p)));
        g.bench_with_input(BenchmarkId::new("chr", pbound), &pbound, |b, &p| b.iter(|| chr_index(p)));
    }
    g.finish();
}

fn plethysm_round_trip(c: &mut Criterion) {
    let sinh = make_sinh(10);
    let asinh = make_arcsinh(10);
    c.bench_function("Sinh[Arcsinh] at pbound 10", |b| b.iter(|| plethysm(&sinh, &asinh).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle build");
    g.sample_size(10);
    for m in [5usize, 6, 7] {
        g.bench_with_input(BenchmarkId::new("lambda-prime", m), &m, |b, &m| {
            b.iter(|| Algebra::build(Kind::LambdaPrime, m, &BuildOptions::default()).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, product_formula, cycle_indices, plethysm_round_trip, oracle);
criterion_main!(benches);
