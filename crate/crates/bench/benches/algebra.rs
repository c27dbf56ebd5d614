use std::hint::black_box;

use autfn_bench::nielsen_product;
use autfn_core::algebraverify::{build_swn, build_t, run_relation_suite, SuiteParams};
use autfn_core::linear::SimplicityMode;
use autfn_core::FiniteMatrixGroup;
use criterion::{criterion_group, criterion_main, Criterion};

fn compose(c: &mut Criterion) {
    let f = nielsen_product(5);
    let g = f.inverse().unwrap();
    c.bench_function("compose_rank5", |b| b.iter(|| black_box(&f).compose(black_box(&g)).unwrap()));
    c.bench_function("pow_rank5", |b| b.iter(|| black_box(&f).pow(8).unwrap()));
}

fn enumerate(c: &mut Criterion) {
    c.bench_function("swn_rank4", |b| b.iter(|| build_swn(black_box(4)).unwrap().order()));
    c.bench_function("t_m3", |b| b.iter(|| build_t(black_box(3)).unwrap().order()));
    c.bench_function("sl3_f2_simple", |b| {
        b.iter(|| {
            let g = FiniteMatrixGroup::special_linear(3, 2, 1 << 20).unwrap();
            g.is_simple(SimplicityMode::ClassRepresentatives)
        })
    });
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("relations");
    group.sample_size(10);
    for jobs in [1, 0] {
        let params = SuiteParams { jobs, ..SuiteParams::default() };
        group.bench_function(format!("full_jobs{jobs}"), |b| b.iter(|| run_relation_suite(&params).unwrap().summary));
    }
    group.finish();
}

criterion_group!(benches, compose, enumerate, suite);
criterion_main!(benches);
