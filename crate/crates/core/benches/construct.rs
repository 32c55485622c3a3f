use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ggp_core::csoperator::eigensolve;
use ggp_core::families::{jack_row, recurrence_table, Direction};
use ggp_core::verify::{check_identity_set, CoefficientSet};

fn bench_eigensolve(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigensolve");
    for (m, n) in [(4, 0), (3, 3), (8, 0), (5, 5)] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{m}_{n}")), &(m, n), |b, &(m, n)| {
            b.iter(|| eigensolve(black_box(m), black_box(n)))
        });
    }
    group.finish();
}

fn bench_tables(c: &mut Criterion) {
    c.bench_function("recurrence_table_8", |b| {
        b.iter(|| recurrence_table(black_box(8), Direction::LowerN))
    });
    c.bench_function("jack_row_12", |b| b.iter(|| jack_row(black_box(12))));
}

fn bench_identities(c: &mut Criterion) {
    let k = CoefficientSet::standard();
    c.bench_function("identity_set_12_17", |b| {
        b.iter(|| check_identity_set(black_box(12), black_box(17), &k))
    });
}

criterion_group!(benches, bench_eigensolve, bench_tables, bench_identities);
criterion_main!(benches);
