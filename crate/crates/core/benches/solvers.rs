use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qtree::par::with_workers;
use qtree::pawn::{solve_omega, solve_pawn};
use qtree::series::TreeSeries;
use qtree::verify::{check_theorem, random_series, CheckConfig, Theorem};

// 1 worker is the sequential baseline; 0 means the default rayon pool.
const POOLS: [(&str, usize); 2] = [("one_thread", 1), ("default_pool", 0)];

fn solvers(c: &mut Criterion) {
    let mut g = c.benchmark_group("solvers");
    g.sample_size(10);
    for (label, workers) in POOLS {
        g.bench_with_input(BenchmarkId::new("pawn_order_6", label), &workers, |b, &w| {
            b.iter(|| with_workers(w, || black_box(solve_pawn(6))))
        });
        g.bench_with_input(BenchmarkId::new("omega_order_8", label), &workers, |b, &w| {
            b.iter(|| with_workers(w, || black_box(solve_omega(8))))
        });
    }
    g.finish();
}

fn products(c: &mut Criterion) {
    let (a, b) = (random_series(8, 1), random_series(8, 2));
    let mut g = c.benchmark_group("products");
    g.sample_size(10);
    for (label, workers) in POOLS {
        g.bench_with_input(BenchmarkId::new("diamond_order_8", label), &workers, |bch, &w| {
            bch.iter(|| with_workers(w, || black_box(TreeSeries::diamond_crls(&a, &b).unwrap())))
        });
    }
    g.finish();
}

fn sweeps(c: &mut Criterion) {
    let cfg = CheckConfig::default();
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    for (label, workers) in POOLS {
        g.bench_with_input(BenchmarkId::new("ombral_iti", label), &workers, |b, &w| {
            b.iter(|| with_workers(w, || black_box(check_theorem(Theorem::UmbraOfChildren, &cfg))))
        });
    }
    g.finish();
}

criterion_group!(benches, solvers, products, sweeps);
criterion_main!(benches);
