use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wreathchar_core::oracle::specht_value;
use wreathchar_core::{build_table, modular_report, CharKey, CharacterEngine, Method};

fn single_values(c: &mut Criterion) {
    let key = CharKey::parse(3, "[[2],[2,1],[1]]", "[[2,1],[1],[2]]").unwrap();
    let mut g = c.benchmark_group("value");
    g.bench_function("mn", |b| b.iter(|| CharacterEngine::new().mn_value(black_box(&key))));
    g.bench_function("row", |b| b.iter(|| CharacterEngine::new().row_value(black_box(&key)).unwrap()));
    g.bench_function("oracle", |b| b.iter(|| specht_value(black_box(&key)).unwrap()));
    g.finish();
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("table");
    g.sample_size(10);
    for (k, n) in [(3, 3), (2, 5), (3, 4)] {
        for method in [Method::Mn, Method::Row] {
            g.bench_with_input(BenchmarkId::new(method.name(), format!("k{k}n{n}")), &(k, n), |b, &(k, n)| {
                b.iter(|| build_table(&CharacterEngine::new(), k, n, method, None).unwrap())
            });
        }
    }
    g.finish();
}

fn modular(c: &mut Criterion) {
    c.bench_function("modular k3n3", |b| b.iter(|| modular_report(&CharacterEngine::new(), 3, 3, None).unwrap()));
}

criterion_group!(benches, single_values, tables, modular);
criterion_main!(benches);
