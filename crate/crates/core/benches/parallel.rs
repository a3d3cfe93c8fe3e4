use std::f64::consts::PI;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyptile::construct::solve_equilateral_even_gon;
use hyptile::tiling::angle_combinations_with;
use hyptile::verify::run_suite;
use hyptile::{Angle, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn combinations(c: &mut Criterion) {
    let angles: Vec<Angle> = [1, 2, 3, 5, 7].iter().map(|&d| Angle(PI / (d as f64 * 2.3))).collect();
    let mut g = c.benchmark_group("angle_combinations");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| angle_combinations_with(exec, &angles, 1e-9).unwrap()));
    }
    g.finish();
}

fn even_gon_batch(c: &mut Criterion) {
    let mut g = c.benchmark_group("even_gon_batch");
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                exec.map_range(64, |i| {
                    let h: Vec<Angle> = (0..4).map(|j| Angle(0.3 + 0.01 * ((i * 5 + j * 3) % 40) as f64)).collect();
                    solve_equilateral_even_gon(&h).map(|e| e.polygon.len())
                })
            })
        });
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for suite in ["evengon", "reg-is-best"] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(suite, name), &exec, |b, &exec| {
                b.iter(|| run_suite(suite, 42, exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, combinations, even_gon_batch, suites);
criterion_main!(benches);
