//! Sequential against parallel execution of the heavy loops.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dmbl::catalog;
use dmbl::finalg::TermTable;
use dmbl::par::Strategy;
use dmbl::terms::space::TermSpace;
use dmbl::varieties::{jonsson_check, sweep_characterisations, JonssonOptions};
use std::hint::black_box;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn term_tables(c: &mut Criterion) {
    let space = TermSpace::new(3, 7);
    let u = catalog::u();
    let mut g = c.benchmark_group("term_table_u_3x7");
    for (label, s) in STRATEGIES {
        g.bench_with_input(BenchmarkId::from_parameter(label), &s, |b, &s| {
            b.iter(|| TermTable::build(black_box(&u), &space, s))
        });
    }
    g.finish();
}

fn characterisation_sweep(c: &mut Criterion) {
    let space = TermSpace::new(3, 7);
    let mut g = c.benchmark_group("characterisation_sweep_3x7");
    g.sample_size(10);
    for (label, s) in STRATEGIES {
        g.bench_with_input(BenchmarkId::from_parameter(label), &s, |b, &s| {
            b.iter(|| sweep_characterisations(black_box(&space), s))
        });
    }
    g.finish();
}

fn jonsson(c: &mut Criterion) {
    let mut g = c.benchmark_group("jonsson_small");
    g.sample_size(10);
    for (label, s) in STRATEGIES {
        let opts = JonssonOptions {
            square_cap: 16,
            cube_cap: 8,
            strategy: s,
        };
        g.bench_with_input(BenchmarkId::from_parameter(label), &opts, |b, opts| {
            b.iter(|| jonsson_check(black_box(opts)))
        });
    }
    g.finish();
}

criterion_group!(benches, term_tables, characterisation_sweep, jonsson);
criterion_main!(benches);
