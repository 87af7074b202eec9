use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use bsol_core::dynamics::{analyze_state_space, knuth_exponent_check};
use bsol_core::stochastic::{run_chains, ChainConfig, ChainVariant};
use bsol_core::system::Bulgarian;
use bsol_core::{Exec, Limits};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn graph_analysis(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("analyze_state_space");
    group.sample_size(10);
    for n in [30u32, 40, 50] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| analyze_state_space(&Bulgarian, black_box(n), &limits, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn exponent_check(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("knuth_exponent_check");
    group.sample_size(10);
    for k in [7u32, 8] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, k), &k, |b, &k| {
                b.iter(|| knuth_exponent_check(black_box(k), &limits, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn independent_chains(c: &mut Criterion) {
    let configs: Vec<ChainConfig> = (0..16)
        .map(|seed| {
            let mut cfg = ChainConfig::new(ChainVariant::Ejs, 210, 0.5, seed);
            cfg.burn_in = 1_000;
            cfg.samples = 5_000;
            cfg
        })
        .collect();
    let mut group = c.benchmark_group("run_chains_16x_ejs_210");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| run_chains(black_box(&configs), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, graph_analysis, exponent_check, independent_chains);
criterion_main!(benches);
