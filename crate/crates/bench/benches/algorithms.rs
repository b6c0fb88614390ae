use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use netbound::{
    bt_alg, build_decomposition, default_frame, generate, net_alg_with, Family, NetAlgRoute,
};

fn bench_net_alg(c: &mut Criterion) {
    let mut group = c.benchmark_group("net_alg");
    for n in [8, 16, 32] {
        let g = generate(Family::SquareGrid(n)).unwrap();
        let f = default_frame(&g);
        group.bench_with_input(BenchmarkId::new("side_sweep", n), &n, |b, _| {
            b.iter(|| net_alg_with(black_box(&g), &f, NetAlgRoute::SideSweep).unwrap())
        });
        if n <= 16 {
            group.bench_with_input(BenchmarkId::new("per_source", n), &n, |b, _| {
                b.iter(|| net_alg_with(black_box(&g), &f, NetAlgRoute::PerSource).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_bt_alg(c: &mut Criterion) {
    let mut group = c.benchmark_group("bt_alg");
    group.sample_size(20);
    for n in [16, 32, 50] {
        let g = generate(Family::SquareGrid(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("grid", n), &n, |b, _| {
            b.iter(|| bt_alg(black_box(&g), None).unwrap())
        });
    }
    let g = generate(Family::RandomTriangulation { n: 1000, seed: 1 }).unwrap();
    group.bench_function("triangulation_1000", |b| b.iter(|| bt_alg(black_box(&g), None).unwrap()));
    group.finish();
}

fn bench_decomposition(c: &mut Criterion) {
    let g = generate(Family::SquareGrid(32)).unwrap();
    let run = bt_alg(&g, None).unwrap();
    c.bench_function("build_decomposition/grid/32", |b| {
        b.iter(|| build_decomposition(black_box(&run), &g).unwrap())
    });
}

criterion_group!(benches, bench_net_alg, bench_bt_alg, bench_decomposition);
criterion_main!(benches);
