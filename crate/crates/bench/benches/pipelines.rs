use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rainbowk_bench::extremal_fixtures;
use rainbowk_core::independence::alpha_at_least;
use rainbowk_core::random::connected_gnp;
use rainbowk_core::{rc_exact, rc_pipeline, rvc_pipeline, sigma_k, sparsify, Graph, Limits};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gnp_graph(n: usize, k: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = 3.0 * (n as f64).ln() / n as f64;
    let all: Vec<usize> = (0..n).collect();
    loop {
        if let Some(g) = connected_gnp(n, p, 1000, &mut rng) {
            if alpha_at_least(&g, &all, k).holds {
                return g;
            }
        }
    }
}

fn sigma(c: &mut Criterion) {
    let mut group = c.benchmark_group("sigma_k");
    for n in [20, 40, 80] {
        let g = gnp_graph(n, 3, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| sigma_k(black_box(g), 3)));
    }
    group.finish();
}

fn pipelines(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipelines");
    group.sample_size(20);
    for f in extremal_fixtures() {
        group.bench_with_input(BenchmarkId::new("rc", &f.name), &f, |b, f| b.iter(|| rc_pipeline(&f.graph, f.k)));
        group.bench_with_input(BenchmarkId::new("rvc", &f.name), &f, |b, f| {
            b.iter(|| rvc_pipeline(&f.graph, f.k, 1))
        });
    }
    for n in [40, 80] {
        let g = gnp_graph(n, 2, 100 + n as u64);
        group.bench_with_input(BenchmarkId::new("rc", format!("gnp-{n}")), &g, |b, g| b.iter(|| rc_pipeline(g, 2)));
        group.bench_with_input(BenchmarkId::new("rvc", format!("gnp-{n}")), &g, |b, g| {
            b.iter(|| rvc_pipeline(g, 2, 1))
        });
        group.bench_with_input(BenchmarkId::new("sparsify", format!("gnp-{n}")), &g, |b, g| b.iter(|| sparsify(g, 2)));
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let cases = [("cycle-8", Graph::cycle(8)), ("path-8", Graph::path(8))];
    let mut group = c.benchmark_group("rc_exact");
    for (name, g) in &cases {
        group.bench_function(*name, |b| b.iter(|| rc_exact(g, &Limits::default())));
    }
    group.finish();
}

criterion_group!(benches, sigma, pipelines, oracle);
criterion_main!(benches);
