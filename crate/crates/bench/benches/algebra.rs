use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use octoconj::remark::{complex_instance, split_instance};
use octoconj::{build_table, conjugacy_witness, single_conjugator_search, Algebra};
use octoconj_bench::dense_pair;

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    for alg in Algebra::ALL {
        let (a, b) = dense_pair(alg);
        group.bench_function(alg.name(), |bench| bench.iter(|| black_box(&a).mul(black_box(&b)).unwrap()));
    }
    group.finish();

    c.bench_function("build_table/Os", |bench| bench.iter(|| build_table(black_box(Algebra::Os)).unwrap()));
}

fn witnesses(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjugacy_witness");
    for alg in Algebra::ALL {
        let (a, b) = dense_pair(alg);
        group.bench_function(alg.name(), |bench| bench.iter(|| conjugacy_witness(black_box(&a), black_box(&b)).unwrap()));
    }
    let split = split_instance();
    group.bench_function("remark/Os", |bench| bench.iter(|| conjugacy_witness(&split.a, &split.b).unwrap()));
    group.finish();
}

fn commutant(c: &mut Criterion) {
    let mut group = c.benchmark_group("single_conjugator_search");
    for inst in [split_instance(), complex_instance()] {
        group.bench_function(inst.a.algebra().name(), |bench| {
            bench.iter(|| single_conjugator_search(black_box(&inst.a), black_box(&inst.b)).unwrap())
        });
    }
    let (a, b) = dense_pair(Algebra::O);
    group.bench_function("dense/O", |bench| bench.iter(|| single_conjugator_search(&a, &b).unwrap()));
    group.finish();
}

criterion_group!(benches, products, witnesses, commutant);
criterion_main!(benches);
