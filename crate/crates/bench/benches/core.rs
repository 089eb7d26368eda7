use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use qteleport::bounds::{holevo_quantity, min_comm_two_independent, random_search_two_bit_min};
use qteleport::qstate::werner_state;
use qteleport::teleport::{fidelity_monte_carlo, fidelity_quadrature_oracle};
use qteleport_bench::{boundary_channel, boundary_scenario};

fn bench_eigensolver(c: &mut Criterion) {
    let state = werner_state(0.7).unwrap();
    c.bench_function("eigenvalues_werner_4x4", |b| {
        b.iter(|| black_box(&state).eigenvalues())
    });
}

fn bench_holevo(c: &mut Criterion) {
    c.bench_function("holevo_quantity", |b| {
        b.iter(|| holevo_quantity(black_box(0.6)).unwrap())
    });
}

fn bench_quadrature(c: &mut Criterion) {
    let channel = boundary_channel();
    c.bench_function("quadrature_oracle_grid_200", |b| {
        b.iter(|| fidelity_quadrature_oracle(black_box(&channel), 200))
    });
}

fn bench_monte_carlo(c: &mut Criterion) {
    let scenario = boundary_scenario();
    c.bench_function("fidelity_monte_carlo_10k", |b| {
        b.iter(|| fidelity_monte_carlo(black_box(&scenario), 10_000, 0))
    });
}

fn bench_threshold_optimizer(c: &mut Criterion) {
    c.bench_function("min_comm_two_independent", |b| {
        b.iter(min_comm_two_independent)
    });
}

fn bench_random_search(c: &mut Criterion) {
    c.bench_function("random_search_100k", |b| {
        b.iter(|| random_search_two_bit_min(100_000, 0))
    });
}

criterion_group!(
    benches,
    bench_eigensolver,
    bench_holevo,
    bench_quadrature,
    bench_monte_carlo,
    bench_threshold_optimizer,
    bench_random_search
);
criterion_main!(benches);
