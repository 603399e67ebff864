use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use galois_core::{
    check_pair_all_basepoints, find_scaling_conjugates, load_case, search, GroupKind, Jobs, PrimeModulus,
    SearchConfig, Strategy,
};

const MODES: [(&str, Jobs); 2] = [("sequential", Jobs::SEQUENTIAL), ("parallel", Jobs::DEFAULT)];

fn all_basepoints(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_basepoints");
    for p in [23, 59] {
        let (g1, g2) = load_case(p, 'b').unwrap().subgroups().unwrap();
        for (name, jobs) in MODES {
            group.bench_with_input(BenchmarkId::new(name, p), &jobs, |b, &jobs| {
                b.iter(|| check_pair_all_basepoints(black_box(&g1), black_box(&g2), jobs).unwrap())
            });
        }
    }
    group.finish();
}

fn scaling_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("scaling_sweep");
    for p in [23, 59] {
        let (g1, _) = load_case(p, 'a').unwrap().subgroups().unwrap();
        for (name, jobs) in MODES {
            group.bench_with_input(BenchmarkId::new(name, p), &jobs, |b, &jobs| {
                b.iter(|| find_scaling_conjugates(black_box(&g1), jobs))
            });
        }
    }
    group.finish();
}

fn random_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_search");
    group.sample_size(10);
    let p = PrimeModulus::new(23).unwrap();
    for (name, jobs) in MODES {
        let cfg = SearchConfig::new(p, GroupKind::Sym4, GroupKind::Dihedral(24), Strategy::Random, 7, 500, jobs).unwrap();
        group.bench_function(name, |b| b.iter(|| search(black_box(&cfg)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, all_basepoints, scaling_sweep, random_search);
criterion_main!(benches);
