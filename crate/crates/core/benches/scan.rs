use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use singspace::search::{verify_with, Execution, ScanConfig, ScanMode};
use singspace::FieldCtx;

fn executions() -> [(&'static str, Execution); 2] {
    [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel { jobs: 0 }),
    ]
}

fn scans(c: &mut Criterion) {
    let cases = [
        (ScanMode::Bound, 3, 3, 2),
        (ScanMode::Equality, 2, 2, 5),
        (ScanMode::Equality, 2, 3, 2),
    ];
    for (mode, n, p, q) in cases {
        let field = FieldCtx::new(q).unwrap();
        let mut group = c.benchmark_group(format!("{mode:?}/{n}x{p}/F{q}"));
        group.sample_size(10);
        for (name, exec) in executions() {
            group.bench_function(BenchmarkId::from_parameter(name), |b| {
                b.iter(|| verify_with(mode, field, n, p, ScanConfig::with_execution(exec)))
            });
        }
        group.finish();
    }
}

fn equality_3x3(c: &mut Criterion) {
    let field = FieldCtx::f2();
    let mut group = c.benchmark_group("Equality/3x3/F2");
    group.sample_size(10);
    for (name, exec) in executions() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_with(ScanMode::Equality, field, 3, 3, ScanConfig::with_execution(exec)))
        });
    }
    group.finish();
}

criterion_group!(benches, scans, equality_3x3);
criterion_main!(benches);
