use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use roton_core::dispersion::linspace;
use roton_core::kinetics::kinetic_root;
use roton_core::{
    correlation_scan, critical_omega_d, find_roton, pair_correlation, plasma_z, phase_scan, QuadratureConfig,
    ReducedParams, RotonSearch,
};

fn plasma_dispersion(c: &mut Criterion) {
    let points: Vec<Complex64> = (0..64)
        .map(|i| Complex64::from_polar(0.1 + 0.08 * i as f64, 0.3 * i as f64))
        .collect();
    c.bench_function("plasma_z/64 points in |z| <= 5", |b| {
        b.iter(|| points.iter().map(|&z| plasma_z(black_box(z))).sum::<Complex64>())
    });
}

fn roton_search(c: &mut Criterion) {
    let rp = ReducedParams::classical(2.0, 1.99).unwrap();
    let search = RotonSearch::for_diffusion(2.0);
    c.bench_function("find_roton/D=2 wd=1.99", |b| b.iter(|| find_roton(black_box(&rp), &search)));
    c.bench_function("critical_omega_d/D=2", |b| b.iter(|| critical_omega_d(black_box(2.0), 1e-9)));
    c.bench_function("phase_scan/20x31", |b| {
        b.iter(|| phase_scan((0.5, 10.0), (0.0, 3.0), 20, 31).unwrap())
    });
}

fn kinetic(c: &mut Criterion) {
    let rp = ReducedParams::classical(2.0, 0.0).unwrap();
    c.bench_function("kinetic_root/k=0.2", |b| b.iter(|| kinetic_root(black_box(0.2), &rp).unwrap()));
}

fn correlation(c: &mut Criterion) {
    let rp = ReducedParams::classical(2.0, 1.99).unwrap();
    let quad = QuadratureConfig::default();
    let grid = linspace(0.5, 40.0, 396);
    c.bench_function("pair_correlation/r=5", |b| {
        b.iter(|| pair_correlation(black_box(5.0), &rp, &quad).unwrap())
    });
    c.bench_function("correlation_scan/396 points", |b| {
        b.iter(|| correlation_scan(&rp, black_box(&grid), &quad).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = plasma_dispersion, roton_search, kinetic, correlation
}
criterion_main!(benches);
