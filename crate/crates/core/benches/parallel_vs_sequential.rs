//! Rayon-backed entry points against their sequential twins: growth-path
//! sampling and a Frobenius reproduction sweep.

use criterion::{criterion_group, criterion_main, Criterion};
use frobtower_core::coherent::Variant;
use frobtower_core::engine::Engine;
use frobtower_core::towers::frobenius::{random_elements, reproduce_right};
use frobtower_core::towers::Tower;

fn sampler(c: &mut Criterion) {
    let mut engine = Engine::new(Tower::symmetric(), 5, 1000).unwrap();
    let sys = engine.coherent_system(5, Variant::Plain).unwrap();
    let mut group = c.benchmark_group("sample_growth_10k_paths");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| sys.sample_growth(5, 42, 10_000).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| sys.sample_growth_seq(5, 42, 10_000).unwrap())
    });
    group.finish();
}

fn reproduction_sweep(c: &mut Criterion) {
    let tower = Tower::symmetric();
    let mut engine = Engine::new(Tower::symmetric(), 5, 1000).unwrap();
    let sys = engine.step_system(4).unwrap().clone();
    let samples = random_elements(&tower, 5, 7, 64);
    let mut group = c.benchmark_group("frobenius_reproduction_64_elements");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            frobtower_core::exec::map_slice(&samples, |a| {
                reproduce_right(&tower, &sys, a).unwrap() == *a
            })
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            frobtower_core::exec::map_slice_seq(&samples, |a| {
                reproduce_right(&tower, &sys, a).unwrap() == *a
            })
        })
    });
    group.finish();
}

criterion_group!(benches, sampler, reproduction_sweep);
criterion_main!(benches);
