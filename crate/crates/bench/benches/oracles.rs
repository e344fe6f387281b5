use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sqdist_bench::fixtures;
use sqdist_core::{
    build_delta, build_laplacian_like, char_poly, cofactor_sum, det_bareiss, det_delta_closed,
    inertia, verify_partition,
};
use std::hint::black_box;

fn determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant");
    for (name, p) in fixtures() {
        let delta = build_delta(&p);
        group.bench_with_input(BenchmarkId::new("closed_form", name), &p, |b, p| {
            b.iter(|| det_delta_closed(black_box(p)))
        });
        group.bench_with_input(BenchmarkId::new("bareiss", name), &delta, |b, m| {
            b.iter(|| det_bareiss(black_box(m)))
        });
    }
    group.finish();
}

fn cofactor(c: &mut Criterion) {
    let mut group = c.benchmark_group("cofactor_sum");
    for (name, p) in fixtures() {
        let delta = build_delta(&p);
        group.bench_with_input(BenchmarkId::from_parameter(name), &delta, |b, m| {
            b.iter(|| cofactor_sum(black_box(m)))
        });
    }
    group.finish();
}

fn spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("laplacian_spectrum");
    for (name, p) in fixtures() {
        let Ok(l) = build_laplacian_like(&p) else {
            continue;
        };
        group.bench_with_input(BenchmarkId::new("char_poly", name), &l, |b, m| {
            b.iter(|| char_poly(black_box(m)))
        });
        group.bench_with_input(BenchmarkId::new("inertia", name), &l, |b, m| {
            b.iter(|| inertia(black_box(m)))
        });
    }
    group.finish();
}

fn full_verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_partition");
    group.sample_size(10);
    for (name, p) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| {
            b.iter(|| verify_partition(black_box(p)))
        });
    }
    group.finish();
}

criterion_group!(benches, determinant, cofactor, spectrum, full_verification);
criterion_main!(benches);
