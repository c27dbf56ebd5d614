use std::hint::black_box;

use autfn_bench::{rotation_fixture, subdivided_sphere};
use autfn_core::homology;
use autfn_core::simplicial::{barycentric_subdivide, catalog};
use autfn_core::smith;
use criterion::{criterion_group, criterion_main, Criterion};

fn betti(c: &mut Criterion) {
    let s2 = subdivided_sphere(3, 1);
    let s3 = subdivided_sphere(4, 1);
    c.bench_function("betti_sd_octahedron_f2", |b| b.iter(|| homology::betti(black_box(&s2), 2).unwrap()));
    c.bench_function("betti_sd_s3_f3", |b| b.iter(|| homology::betti(black_box(&s3), 3).unwrap()));
    c.bench_function("subdivide_s3", |b| {
        let k = subdivided_sphere(4, 0);
        b.iter(|| barycentric_subdivide(black_box(&k)).complex.simplex_count())
    });
}

fn smith_checks(c: &mut Criterion) {
    let (oct, rot) = rotation_fixture();
    c.bench_function("smith_rotation_p3", |b| b.iter(|| smith::smith_fixed_check(&oct, black_box(&rot), 3).unwrap()));
    let g = catalog::hyperoctahedral(3).unwrap();
    let mut group = c.benchmark_group("octahedral_scans");
    group.sample_size(10);
    group.bench_function("involution_pairs", |b| b.iter(|| smith::involution_pair_scan(black_box(&g)).unwrap()));
    group.bench_function("no_free_rank2", |b| b.iter(|| smith::no_free_rank2_check(black_box(&g), 2).unwrap()));
    group.finish();
}

criterion_group!(benches, betti, smith_checks);
criterion_main!(benches);
